#include "rkp/tree.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rkp {

Fraction make_fraction(long long num, long long den) {
    if (num == 0 && den == 0) throw std::domain_error("make_fraction: 0/0");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den == 0) return {num > 0 ? 1 : -1, 0};
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

bool is_infinite(const Fraction& f) { return f.den == 0; }

std::string to_string(const Fraction& f) {
    if (f.den == 0) return f.num > 0 ? "∞" : "-∞";
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

Fraction mediant(const Fraction& f, const Fraction& g) {
    if (f.den == 0 && g.den == 0) throw std::domain_error("mediant: both denominators zero");
    return make_fraction(f.num + g.num, f.den + g.den);
}

TreeLevel stern_brocot_level(int n) {
    if (n < 0) throw std::domain_error("stern_brocot_level: negative depth");
    if (n > 30) throw std::domain_error("stern_brocot_level: depth capped at 30");
    std::vector<Fraction> row{{0, 1}, {1, 0}};
    std::vector<Fraction> fresh;
    for (int stage = 0; stage <= n; ++stage) {
        fresh.clear();
        std::vector<Fraction> next;
        next.reserve(2 * row.size() - 1);
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            next.push_back(row[i]);
            Fraction m = mediant(row[i], row[i + 1]);
            next.push_back(m);
            fresh.push_back(m);
        }
        next.push_back(row.back());
        row = std::move(next);
    }
    return {n, fresh};
}

Fraction node_at(const std::string& path) {
    if (path.size() > 60)
        throw std::domain_error("node_at: paths longer than 60 bits would overflow");
    Fraction lo{0, 1}, hi{1, 0};
    Fraction cur = mediant(lo, hi);
    for (char bit : path) {
        if (bit == '0')
            hi = cur;
        else if (bit == '1')
            lo = cur;
        else
            throw std::domain_error("node_at: path must be over {0,1}");
        cur = mediant(lo, hi);
    }
    return cur;
}

Fraction transform_node(long long k, long long l) {
    if (k < 1 || l < 1 || std::gcd(k, l) != 1)
        throw std::invalid_argument("transform_node: k, l must be coprime positive integers");
    return make_fraction(k + l, l - k);
}

TreeLevel new_tree_level(int n) {
    TreeLevel base = stern_brocot_level(n);
    TreeLevel out{n, {}};
    out.nodes.reserve(base.nodes.size());
    for (const Fraction& f : base.nodes) out.nodes.push_back(transform_node(f.num, f.den));
    return out;
}

double slope_cross_check(long long k, long long l) {
    Fraction lhs = transform_node(k, l);
    // (1 - g')/(1 + g') with g' = -k/l: numerator (l+k)/l, denominator (l-k)/l
    Fraction rhs = make_fraction(l + k, l - k);
    if (lhs == rhs) return 0.0;
    if (is_infinite(lhs) || is_infinite(rhs))
        return std::numeric_limits<double>::infinity();
    return std::fabs(static_cast<double>(lhs.num) / static_cast<double>(lhs.den) -
                     static_cast<double>(rhs.num) / static_cast<double>(rhs.den));
}

}  // namespace rkp
