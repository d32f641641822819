#pragma once

#include <json.hpp>

#include "mshopf/algebra.hpp"
#include "mshopf/effective.hpp"
#include "mshopf/graph_io.hpp"
#include "mshopf/multiscale.hpp"

namespace mshopf {

// Stable JSON forms: map iteration order is the canonical ordering, so the
// output is byte-stable for fixed inputs.

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json poly_to_json(const Poly& p);
nlohmann::json monomial_to_json(const Monomial& m);
nlohmann::json algebra_to_json(const AlgebraElement& x);
nlohmann::json tensor_to_json(const TensorElement& t);
nlohmann::json series_tuple_to_json(const SeriesTuple& t);
nlohmann::json forests_to_json(const HopfAlgebra& hopf, const AssignedGraph& g);

} // namespace mshopf
