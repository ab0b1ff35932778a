#pragma once

// JSON encodings shared by the CLI and the file formats.  Slopes are "q/p"
// strings ("inf" for the meridian); integers are JSON numbers, falling back
// to decimal strings beyond 64 bits so every value stays exact.

#include "json.hpp"

#include "cabling/atlas.hpp"
#include "cabling/negcable.hpp"
#include "cabling/paths.hpp"

namespace cabling {

using Json = nlohmann::ordered_json;

Json json_int(const Int& v);
Int int_from_json(const nlohmann::ordered_json& j, const std::string& context);

Json to_json(const Slope& s);
Json to_json(const DecoratedPath& d);
DecoratedPath decorated_path_from_json(const Json& j);

Json to_json(const LegendrianAtlas& atlas);
LegendrianAtlas atlas_from_json(const Json& j);
LegendrianAtlas load_atlas(const std::string& path);

Json to_json(const ToriAtlas& ta);
ToriAtlas tori_atlas_from_json(const Json& j);
ToriAtlas load_tori_atlas(const std::string& path);

Json to_json(const MountainRange& range);

}  // namespace cabling
