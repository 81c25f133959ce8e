#pragma once

#include <string>
#include <vector>

namespace rkp {

/// Reduced fraction with a nonnegative denominator; num/0 with num = 1 is
/// the infinity node used as the transformed root.
struct Fraction {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Reduce and normalize the sign into the numerator. Throws for 0/0.
Fraction make_fraction(long long num, long long den);
bool is_infinite(const Fraction& f);
/// "k/l", "-k/l", or the infinity glyph for 1/0.
std::string to_string(const Fraction& f);

/// Numerators and denominators added componentwise, then reduced.
/// Throws when both denominators vanish.
Fraction mediant(const Fraction& f, const Fraction& g);

struct TreeLevel {
    int depth = 0;
    std::vector<Fraction> nodes;  // strictly increasing left to right
};

/// Level n of the mediant tree grown from the sentinels 0/1 and 1/0:
/// each stage inserts the mediants of all consecutive entries and the new
/// entries form the next level. Level 0 is the root 1/1.
TreeLevel stern_brocot_level(int n);

/// Node reached from the root by a bit path, '0' stepping to the smaller
/// child and '1' to the larger.
Fraction node_at(const std::string& path);

/// Slope-tree relabeling (k,l) -> (k+l)/(l-k), reduced, with the sign
/// carried by the numerator; (1,1) maps to the infinity node. Requires
/// coprime positive input.
Fraction transform_node(long long k, long long l);

/// Level n of the relabeled tree, preserving node order.
TreeLevel new_tree_level(int n);

/// Exact cross-check of the transformed label against the boundary-slope
/// expression (1 - g')/(1 + g') with g' = -k/l, evaluated in rational
/// arithmetic. Returns 0 when the two agree (they must); the unsigned
/// double distance otherwise.
double slope_cross_check(long long k, long long l);

}  // namespace rkp
