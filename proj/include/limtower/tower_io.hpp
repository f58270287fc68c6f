#pragma once
#include <string>
#include <variant>

#include "limtower/cayley.hpp"
#include "limtower/chain_tower.hpp"

namespace limtower {

/* Tower files are JSON with every integer carried as a decimal string, so no
 * consumer's numeric range can silently truncate a value. Parse failures and
 * semantic violations surface as InputError with a path diagnostic. */

using TowerValue = std::variant<AbelianTower, FiniteGroupTower, ChainTower>;

std::string serialize_tower(const AbelianTower& t);
std::string serialize_tower(const FiniteGroupTower& t);
std::string serialize_tower(const ChainTower& t);
std::string serialize_tower(const TowerValue& t);

TowerValue parse_tower(const std::string& text);

// FNV-1a over the raw bytes, for the report's input digest
std::string digest64(const std::string& bytes);

} // namespace limtower
