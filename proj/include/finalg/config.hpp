#pragma once

#include <json.hpp>

#include "finalg/module.hpp"

namespace finalg {

using nlohmann::json;

/// Ring config tree:
///   {"kind":"cyclic","n":4}
///   {"kind":"matrix","p":2,"k":2} | {"kind":"triangular","p":2,"k":2}
///   {"kind":"product","a":{...},"b":{...}}
///   {"kind":"quotient","ring":{...},"ideal_generators":[2]}
///   {"kind":"tables","add":[[...]],"mul":[[...]],"label":"R"}
RingPtr ring_from_config(const json& j);

/// Module config tree:
///   {"kind":"regular"} | {"kind":"free","rank":2}
///   {"kind":"column","p":2,"k":2}
///   {"kind":"quotient","module":{...},"generators":[...]}
///   {"kind":"presentation","rank":2,"generators":[...]}
///   {"kind":"tables","add":[[...]],"act":[[...]],"label":"M"}
ModulePtr module_from_config(const RingPtr& r, const json& j);

json ring_tables_config(const Ring& r);
json module_tables_config(const Module& m);

} // namespace finalg
