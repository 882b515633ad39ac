#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thomae/curve.hpp"

namespace thomae {

// Half-period characteristic [eps' ; eps]. Bit k-1 holds component k.
struct HalfChar {
    int g = 0;
    std::uint32_t eps = 0;
    std::uint32_t eps_prime = 0;

    bool operator==(const HalfChar&) const = default;
    // Dense key in [0, 4^g).
    std::uint32_t key() const { return eps | (eps_prime << g); }
    static HalfChar from_key(int g, std::uint32_t key);
    int bit(int k) const { return (eps >> (k - 1)) & 1u; }
    int bit_prime(int k) const { return (eps_prime >> (k - 1)) & 1u; }
};

enum class Parity { even, odd };

struct Partition {
    int genus = 0;
    IndexSet part;  // smaller part, 0 explicit when infinity belongs to it

    // Canonicalizes any index set (0 optional) into the smaller part.
    static Partition of(int genus, const IndexSet& s);
    IndexSet finite() const { return finite_part(part); }
    // The other part, 0 explicit when infinity belongs to it.
    IndexSet complement() const;
};

HalfChar branch_char(int g, int k);
HalfChar riemann_char(int g);
HalfChar char_sum(const HalfChar& a, const HalfChar& b);
HalfChar partition_char(const Partition& p);
// Characteristic of an arbitrary index set; 0 contributes nothing.
HalfChar set_char(int g, const IndexSet& s);
int multiplicity(const Partition& p);
Parity parity(const HalfChar& c);
inline bool is_odd(const HalfChar& c) { return parity(c) == Parity::odd; }
std::vector<Partition> enumerate_partitions(int g, int m);
Partition char_to_partition(int g, const HalfChar& c);
bool set_order_less(const IndexSet& a, const IndexSet& b);

std::string char_str(const HalfChar& c);
HalfChar parse_char(const std::string& s);

}  // namespace thomae
