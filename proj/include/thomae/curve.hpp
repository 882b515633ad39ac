#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace thomae {

// Sorted index set over {0, 1, ..., 2g+1}; 0 is the branch point at infinity.
using IndexSet = std::vector<int>;

struct CurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CurveSpec {
    int genus = 0;
    std::vector<double> e;  // e[0] unused, e[1..2g+1] ascending
    std::string label;

    int num_finite() const { return 2 * genus + 1; }
    double at(int i) const { return e.at(i); }
};

CurveSpec validate_curve(int genus, std::vector<double> raw, std::string label = {});

double vandermonde(const CurveSpec& spec, const IndexSet& I);
double elementary_symmetric(const CurveSpec& spec, const IndexSet& I, int n);

// All s_0..s_{|I|} at once.
std::vector<double> elementary_symmetric_all(const CurveSpec& spec, const IndexSet& I);

CurveSpec curve_from_json(const std::string& text);
std::string curve_to_json(const CurveSpec& spec);

// Set helpers. All inputs and outputs sorted.
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_minus(const IndexSet& a, const IndexSet& b);
IndexSet set_intersect(const IndexSet& a, const IndexSet& b);
IndexSet set_xor(const IndexSet& a, const IndexSet& b);
IndexSet normalized(IndexSet s);
// {1..2g+1} minus I, ignoring 0 in I.
IndexSet finite_complement(int genus, const IndexSet& I);
IndexSet finite_part(const IndexSet& I);
// I with the entries of `out` removed and those of `in` added.
IndexSet replace(const IndexSet& I, const IndexSet& out, const IndexSet& in);
bool contains(const IndexSet& s, int i);
std::string set_str(const IndexSet& s);

}  // namespace thomae
