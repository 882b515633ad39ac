#include "thomae/relations.hpp"

#include <sstream>

namespace thomae {

namespace {

// "+ 23 24 25 / 34 35 45 : 1" or "- 356 347 125 126 / 156 256 : 23,13"
LiteralTerm parse_term(const std::string& text) {
    std::istringstream in(text);
    LiteralTerm t;
    std::string tok;
    in >> tok;
    if (tok != "+" && tok != "-") throw RelationError("term must start with a sign: " + text);
    t.sign = tok == "+" ? 1 : -1;
    auto* side = &t.num;
    while (in >> tok) {
        if (tok == "/") {
            side = &t.den;
        } else if (tok == ":") {
            in >> tok;
            std::istringstream g(tok);
            std::string part;
            while (std::getline(g, part, ',')) t.grads.push_back(digits(part == "-" ? "" : part));
        } else {
            side->push_back(digits(tok));
        }
    }
    if (t.grads.empty() || t.grads.size() > 2) throw RelationError("term needs one or two gradients: " + text);
    return t;
}

std::vector<IndexSet> sets(const std::string& text) {
    std::istringstream in(text);
    std::vector<IndexSet> out;
    std::string tok;
    while (in >> tok) out.push_back(digits(tok));
    return out;
}

LiteralRelation rel(std::string name, int genus, std::string lhs, int order, std::string pre_num,
                    std::string pre_den, std::vector<std::string> terms) {
    LiteralRelation r;
    r.name = std::move(name);
    r.genus = genus;
    r.zero_sum = lhs == "0";
    r.lhs = r.zero_sum ? IndexSet{} : digits(lhs == "-" ? "" : lhs);
    r.order = order;
    r.pre_num = sets(pre_num);
    r.pre_den = sets(pre_den);
    for (auto& t : terms) r.terms.push_back(parse_term(t));
    return r;
}

// Two-term vector relation with a shared denominator.
LiteralRelation two_term(std::string name, int genus, std::string lhs, std::string den, std::string num_a,
                         std::string grad_a, std::string num_b, std::string grad_b) {
    return rel(std::move(name), genus, std::move(lhs), 1, "", den,
               {"+ " + num_a + " : " + grad_a, "- " + num_b + " : " + grad_b});
}

std::vector<LiteralRelation> build() {
    std::vector<LiteralRelation> v;
    // genus 2, gradient of theta[{}] in every pair of odd gradients
    v.push_back(two_term("g2.grad2.1", 2, "-", "34 35 45", "23 24 25", "1", "13 14 15", "2"));
    v.push_back(two_term("g2.grad2.2", 2, "-", "24 25 45", "23 34 35", "1", "12 14 15", "3"));
    v.push_back(two_term("g2.grad2.3", 2, "-", "23 25 35", "24 34 45", "1", "12 13 15", "4"));
    v.push_back(two_term("g2.grad2.4", 2, "-", "23 24 34", "25 35 45", "1", "12 13 14", "5"));
    v.push_back(two_term("g2.grad2.5", 2, "-", "14 15 45", "13 34 35", "2", "12 24 25", "3"));
    v.push_back(two_term("g2.grad2.6", 2, "-", "13 15 35", "14 43 45", "2", "12 23 25", "4"));
    v.push_back(two_term("g2.grad2.7", 2, "-", "13 14 34", "15 35 45", "2", "12 23 24", "5"));
    v.push_back(two_term("g2.grad2.8", 2, "-", "12 15 25", "14 24 45", "3", "13 23 35", "4"));
    v.push_back(two_term("g2.grad2.9", 2, "-", "12 14 24", "15 25 54", "3", "13 23 34", "5"));
    v.push_back(two_term("g2.grad2.10", 2, "-", "12 13 23", "15 25 35", "4", "14 24 34", "5"));

    // genus 3, gradient of theta[{1}]
    v.push_back(two_term("g3.grad2.1", 3, "1", "145 567 467", "134 135 367", "12", "124 125 267", "13"));
    v.push_back(two_term("g3.grad2.2", 3, "1", "136 357 657", "143 146 457", "12", "123 126 257", "14"));
    v.push_back(two_term("g3.grad2.3", 3, "1", "136 347 647", "153 156 547", "12", "123 126 247", "15"));
    v.push_back(two_term("g3.grad2.4", 3, "1", "134 357 457", "163 164 657", "12", "123 124 257", "16"));
    v.push_back(two_term("g3.grad2.5", 3, "1", "134 356 456", "173 174 756", "12", "123 124 256", "17"));
    v.push_back(two_term("g3.grad2.6", 3, "1", "125 267 567", "142 145 467", "13", "132 135 367", "14"));
    v.push_back(two_term("g3.grad2.7", 3, "1", "124 267 467", "152 154 567", "13", "132 134 367", "15"));
    v.push_back(two_term("g3.grad2.8", 3, "1", "125 427 457", "162 165 467", "13", "132 135 347", "16"));
    v.push_back(two_term("g3.grad2.9", 3, "1", "125 246 456", "172 175 467", "13", "132 135 346", "17"));
    v.push_back(two_term("g3.grad2.10", 3, "1", "123 267 367", "152 153 567", "14", "142 143 467", "15"));
    v.push_back(two_term("g3.grad2.11", 3, "1", "125 237 357", "162 165 367", "14", "142 145 347", "16"));
    v.push_back(two_term("g3.grad2.12", 3, "1", "125 236 356", "172 175 736", "14", "142 145 436", "17"));
    v.push_back(two_term("g3.grad2.13", 3, "1", "123 247 347", "162 163 647", "15", "152 153 547", "16"));
    v.push_back(two_term("g3.grad2.14", 3, "1", "123 246 346", "172 173 746", "15", "152 153 546", "17"));
    v.push_back(two_term("g3.grad2.15", 3, "1", "123 245 345", "172 173 745", "16", "162 163 645", "17"));

    // three-term closing relations
    v.push_back(rel("g2.grad3", 2, "0", 1, "", "",
                    {"+ 14 15 23 : 1", "- 24 25 13 : 2", "+ 34 35 12 : 3"}));
    v.push_back(rel("g3.grad3", 3, "0", 1, "", "",
                    {"+ 267 527 347 : 12", "- 367 537 247 : 13", "+ 467 547 237 : 14"}));

    // second derivatives as symmetrized products of gradients
    v.push_back(rel("g3.hess.123", 3, "-", 2, "", "123 457 467",
                    {"- 356 347 125 126 / 156 256 : 23,13", "+ 256 247 135 136 / 156 356 : 23,12",
                     "- 156 147 235 236 / 256 356 : 13,12"}));
    v.push_back(rel("g3.hess.124", 3, "-", 2, "", "124 357 367",
                    {"- 456 347 125 126 / 156 256 : 24,14", "+ 256 237 145 146 / 156 456 : 24,12",
                     "- 156 137 245 246 / 256 456 : 14,12"}));
    v.push_back(rel("g4.hess.1", 4, "1", 2, "", "1234 6789 5789",
                    {"- 1456 4789 1235 1236 / 1256 1356 : 134,124", "+ 1356 3789 1245 1246 / 1256 1456 : 134,123",
                     "- 1256 2789 1345 1346 / 1356 1456 : 124,123"}));
    v.push_back(rel("g4.hess.2", 4, "2", 2, "", "1234 6789 5789",
                    {"- 2456 4789 1235 1236 / 1256 2356 : 234,124", "+ 2356 3789 1245 1246 / 1256 2456 : 234,123",
                     "- 1256 1789 2345 2346 / 2356 2456 : 124,123"}));
    v.push_back(rel("g4.hess.empty", 4, "-", 2, "", "1234 6789 6789 5789 5789",
                    {"- 3456 1256 1789 2789 1245 1246 1235 1236 / 2456 1456 2356 1356 : 234,134",
                     "+ 2456 1356 1789 3789 1345 1346 1235 1236 / 3456 1456 2356 1256 : 234,124",
                     "- 2356 1456 1789 4789 1245 1246 1345 1346 / 3456 2456 1256 1356 : 234,123",
                     "- 1456 2356 2789 3789 2345 2346 1235 1236 / 3456 2456 1256 1356 : 134,124",
                     "+ 1356 2456 2789 4789 1245 1246 2345 2346 / 3456 1456 1256 2356 : 134,123",
                     "- 1256 3456 3789 4789 2345 2346 1345 1346 / 2456 1456 1356 2356 : 124,123"}));
    return v;
}

}  // namespace

const std::vector<LiteralRelation>& literal_fixtures() {
    static const std::vector<LiteralRelation> all = build();
    return all;
}

}  // namespace thomae
