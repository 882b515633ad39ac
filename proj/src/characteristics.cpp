#include "thomae/characteristics.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_map>
#include <stdexcept>

namespace thomae {

HalfChar HalfChar::from_key(int g, std::uint32_t key) {
    std::uint32_t mask = (1u << g) - 1;
    return {g, key & mask, (key >> g) & mask};
}

static std::uint32_t ones(int n) { return n <= 0 ? 0u : (1u << n) - 1; }

HalfChar branch_char(int g, int k) {
    if (k < 0 || k > 2 * g + 1) throw std::out_of_range("branch index out of range");
    if (k == 0) return {g, 0, 0};
    if (k == 2 * g + 1) return {g, ones(g), 0};
    int j = (k + 1) / 2;
    std::uint32_t top = 1u << (j - 1);
    std::uint32_t bottom = (k % 2 == 0) ? ones(j) : ones(j - 1);
    return {g, bottom, top};
}

HalfChar riemann_char(int g) {
    HalfChar c{g, 0, 0};
    for (int k = 1; k <= g; ++k) c = char_sum(c, branch_char(g, 2 * k));
    return c;
}

HalfChar char_sum(const HalfChar& a, const HalfChar& b) {
    if (a.g != b.g) throw std::invalid_argument("characteristics of different genus");
    return {a.g, a.eps ^ b.eps, a.eps_prime ^ b.eps_prime};
}

HalfChar set_char(int g, const IndexSet& s) {
    HalfChar c = riemann_char(g);
    for (int i : s)
        if (i != 0) c = char_sum(c, branch_char(g, i));
    return c;
}

HalfChar partition_char(const Partition& p) { return set_char(p.genus, p.part); }

Partition Partition::of(int genus, const IndexSet& s) {
    IndexSet f = finite_part(normalized(s));
    int c = static_cast<int>(f.size());
    IndexSet full = f;
    if ((genus + 1 - c) % 2 != 0) full.insert(full.begin(), 0);
    IndexSet all;
    for (int i = 0; i <= 2 * genus + 1; ++i) all.push_back(i);
    IndexSet other = set_minus(all, full);
    if (full.size() > other.size() || (full.size() == other.size() && !contains(full, 0)))
        std::swap(full, other);
    return {genus, full};
}

IndexSet Partition::complement() const {
    IndexSet all;
    for (int i = 0; i <= 2 * genus + 1; ++i) all.push_back(i);
    return set_minus(all, part);
}

int multiplicity(const Partition& p) {
    Partition q = Partition::of(p.genus, p.part);
    return (p.genus + 1 - static_cast<int>(q.part.size())) / 2;
}

Parity parity(const HalfChar& c) {
    return (std::popcount(c.eps & c.eps_prime) & 1) ? Parity::odd : Parity::even;
}

// Subsets of {0..n-1} of size k, lexicographic.
static void combinations(int n, int k, std::vector<IndexSet>& out) {
    IndexSet cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

std::vector<Partition> enumerate_partitions(int g, int m) {
    if (m < 0 || m > (g + 1) / 2) throw std::out_of_range("multiplicity out of range");
    int size = g + 1 - 2 * m;
    std::vector<IndexSet> combos;
    combinations(2 * g + 2, size, combos);
    std::vector<Partition> out;
    for (auto& s : combos) {
        if (m == 0 && s.front() != 0) continue;
        out.push_back({g, s});
    }
    return out;
}

Partition char_to_partition(int g, const HalfChar& c) {
    static std::mutex mu;
    static std::map<int, std::unordered_map<std::uint32_t, Partition>> tables;
    std::lock_guard lock(mu);
    auto& table = tables[g];
    if (table.empty())
        for (int m = 0; m <= (g + 1) / 2; ++m)
            for (auto& p : enumerate_partitions(g, m)) table.emplace(partition_char(p).key(), p);
    auto it = table.find(c.key());
    if (c.g != g || it == table.end()) throw std::logic_error("characteristic without partition");
    return it->second;
}

bool set_order_less(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) throw std::invalid_argument("set order needs equal cardinalities");
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::string char_str(const HalfChar& c) {
    std::string s = "[";
    for (int k = 1; k <= c.g; ++k) s += char('0' + c.bit_prime(k));
    s += "/";
    for (int k = 1; k <= c.g; ++k) s += char('0' + c.bit(k));
    return s + "]";
}

HalfChar parse_char(const std::string& s) {
    auto slash = s.find('/');
    if (s.size() < 3 || s.front() != '[' || s.back() != ']' || slash == std::string::npos)
        throw std::invalid_argument("bad characteristic: " + s);
    std::string top = s.substr(1, slash - 1), bottom = s.substr(slash + 1, s.size() - slash - 2);
    if (top.size() != bottom.size() || top.empty()) throw std::invalid_argument("bad characteristic: " + s);
    HalfChar c{static_cast<int>(top.size()), 0, 0};
    for (int k = 0; k < c.g; ++k) {
        if (top[k] == '1') c.eps_prime |= 1u << k;
        else if (top[k] != '0') throw std::invalid_argument("bad characteristic: " + s);
        if (bottom[k] == '1') c.eps |= 1u << k;
        else if (bottom[k] != '0') throw std::invalid_argument("bad characteristic: " + s);
    }
    return c;
}

}  // namespace thomae
