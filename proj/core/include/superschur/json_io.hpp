#pragma once

#include "superschur/fractions.hpp"
#include "superschur/group_algebra.hpp"
#include "superschur/ideals.hpp"
#include "superschur/super_operator.hpp"

#include <json.hpp>

namespace superschur {

// Exact wire formats: rationals are always "p/q" strings, never floats.

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GroupAlgebraElement& x);
GroupAlgebraElement element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SuperOperator& op);

nlohmann::json to_json(const IdealSequence& seq);

nlohmann::json to_json(const MatMorphism& f);
MatMorphism morphism_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TracePolynomial& p);

} // namespace superschur
