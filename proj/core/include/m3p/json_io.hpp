#ifndef M3P_JSON_IO_HPP
#define M3P_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "m3p/bijection.hpp"
#include "m3p/partitions.hpp"
#include "m3p/qseries.hpp"
#include "m3p/sympoly.hpp"

namespace m3p {

/// Insertion-ordered JSON: reports must be byte-identical across
/// identical invocations.
using OrderedJson = nlohmann::ordered_json;

/// Integer coefficients are serialized as decimal strings; they
/// outgrow 64 bits at moderate truncation orders.
std::string int_string(const Int& v);
std::string rat_string(const Rat& v);

/// {"trunc": T, "coeffs": [[d, "c"], ...]}  (trunc null for exact
/// polynomials).
OrderedJson series_json(const QSeries& s);
/// {"trunc": T, "coeffs": [[d, n, "c"], ...]}
OrderedJson series_json(const QZSeries& s);

OrderedJson partition_json(const Partition& p);
OrderedJson decomposition_json(const Decomposition& d);

/// [{"lambda": [l1,l2,l3], "coeff": "num/den"}, ...] sorted by key.
OrderedJson sympoly_json(const SymPoly3& f);

}  // namespace m3p

#endif
