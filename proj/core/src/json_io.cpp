#include "m3p/json_io.hpp"

namespace m3p {

std::string int_string(const Int& v) { return v.get_str(); }

std::string rat_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

OrderedJson series_json(const QSeries& s) {
    OrderedJson j;
    if (s.trunc() == QSeries::kExact)
        j["trunc"] = nullptr;
    else
        j["trunc"] = s.trunc();
    OrderedJson coeffs = OrderedJson::array();
    for (long d = 0; d <= s.degree(); ++d) {
        if (s.coeff(d) == 0) continue;
        coeffs.push_back(OrderedJson::array({d, int_string(s.coeff(d))}));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

OrderedJson series_json(const QZSeries& s) {
    OrderedJson j;
    j["trunc"] = s.trunc();
    OrderedJson coeffs = OrderedJson::array();
    for (const auto& [n, col] : s.columns()) {
        for (long d = 0; d <= col.degree(); ++d) {
            if (col.coeff(d) == 0) continue;
            coeffs.push_back(OrderedJson::array({d, n, int_string(col.coeff(d))}));
        }
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

OrderedJson partition_json(const Partition& p) {
    OrderedJson arr = OrderedJson::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

OrderedJson decomposition_json(const Decomposition& d) {
    OrderedJson j;
    j["lambda"] = partition_json(d.lambda);
    OrderedJson mu = OrderedJson::array();
    for (int v : d.mu) mu.push_back(v);
    j["mu"] = std::move(mu);
    j["m"] = d.mu.size();
    return j;
}

OrderedJson sympoly_json(const SymPoly3& f) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& [lam, c] : f.coeffs()) {
        OrderedJson t;
        t["lambda"] = OrderedJson::array({lam[0], lam[1], lam[2]});
        t["coeff"] = rat_string(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace m3p
