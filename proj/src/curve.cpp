#include "thomae/curve.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace thomae {

CurveSpec validate_curve(int genus, std::vector<double> raw, std::string label) {
    if (genus < 1) throw CurveError("genus must be positive");
    if (static_cast<int>(raw.size()) != 2 * genus + 1)
        throw CurveError("wrong number of branch points: expected " + std::to_string(2 * genus + 1) +
                         ", got " + std::to_string(raw.size()));
    for (double x : raw)
        if (!std::isfinite(x)) throw CurveError("non-finite branch point");
    std::sort(raw.begin(), raw.end());
    for (size_t i = 1; i < raw.size(); ++i)
        if (raw[i] == raw[i - 1]) throw CurveError("duplicate branch point");
    CurveSpec s;
    s.genus = genus;
    s.e.reserve(raw.size() + 1);
    s.e.push_back(0.0);
    s.e.insert(s.e.end(), raw.begin(), raw.end());
    s.label = std::move(label);
    return s;
}

static void require_finite(const CurveSpec& spec, const IndexSet& I) {
    for (int i : I) {
        if (i == 0) throw CurveError("index set contains infinity (0)");
        if (i < 0 || i > spec.num_finite()) throw CurveError("index out of range");
    }
}

double vandermonde(const CurveSpec& spec, const IndexSet& I) {
    require_finite(spec, I);
    double d = 1.0;
    for (size_t a = 0; a < I.size(); ++a)
        for (size_t b = a + 1; b < I.size(); ++b) {
            int hi = std::max(I[a], I[b]), lo = std::min(I[a], I[b]);
            d *= spec.at(hi) - spec.at(lo);
        }
    return d;
}

std::vector<double> elementary_symmetric_all(const CurveSpec& spec, const IndexSet& I) {
    require_finite(spec, I);
    std::vector<double> s(I.size() + 1, 0.0);
    s[0] = 1.0;
    size_t k = 0;
    for (int i : I) {
        ++k;
        for (size_t n = k; n >= 1; --n) s[n] += spec.at(i) * s[n - 1];
    }
    return s;
}

double elementary_symmetric(const CurveSpec& spec, const IndexSet& I, int n) {
    if (n < 0) throw CurveError("negative degree");
    auto s = elementary_symmetric_all(spec, I);
    return n < static_cast<int>(s.size()) ? s[n] : 0.0;
}

CurveSpec curve_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return validate_curve(j.at("genus").get<int>(), j.at("branch_points").get<std::vector<double>>(),
                          j.value("label", std::string{}));
}

std::string curve_to_json(const CurveSpec& spec) {
    nlohmann::json j;
    j["label"] = spec.label;
    j["genus"] = spec.genus;
    j["branch_points"] = std::vector<double>(spec.e.begin() + 1, spec.e.end());
    return j.dump();
}

IndexSet normalized(IndexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

IndexSet set_xor(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

IndexSet finite_complement(int genus, const IndexSet& I) {
    IndexSet r;
    for (int i = 1; i <= 2 * genus + 1; ++i)
        if (!std::binary_search(I.begin(), I.end(), i)) r.push_back(i);
    return r;
}

IndexSet finite_part(const IndexSet& I) {
    IndexSet r;
    for (int i : I)
        if (i != 0) r.push_back(i);
    return r;
}

IndexSet replace(const IndexSet& I, const IndexSet& out, const IndexSet& in) {
    return set_union(set_minus(I, normalized(out)), normalized(in));
}

bool contains(const IndexSet& s, int i) { return std::binary_search(s.begin(), s.end(), i); }

std::string set_str(const IndexSet& s) {
    std::string r = "{";
    for (size_t k = 0; k < s.size(); ++k) {
        if (k) r += ",";
        r += std::to_string(s[k]);
    }
    return r + "}";
}

}  // namespace thomae
