#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <vector>

#include "ba/errors.hpp"

namespace ba {

/// Integer triple (r, s, t). Members of the triangle of diameter d are the
/// nonnegative triples with r+s+t = d; negative coordinates are allowed in
/// the value itself because displaced locations deliberately step outside
/// the triangle (membership is always checked separately).
struct Location {
    int r = 0, s = 0, t = 0;

    friend constexpr bool operator==(const Location&, const Location&) = default;
    friend constexpr Location operator+(const Location& a, const Location& b) {
        return {a.r + b.r, a.s + b.s, a.t + b.t};
    }
    friend constexpr Location operator-(const Location& a, const Location& b) {
        return {a.r - b.r, a.s - b.s, a.t - b.t};
    }
    friend std::ostream& operator<<(std::ostream& os, const Location& x) {
        return os << "(" << x.r << "," << x.s << "," << x.t << ")";
    }
};

// The three positive roots of the hexagonal displacement system; their sum
// is zero.
inline constexpr Location root_alpha{1, -1, 0};
inline constexpr Location root_beta{0, 1, -1};
inline constexpr Location root_gamma{-1, 0, 1};

inline constexpr int triangle_size(int d) { return (d + 1) * (d + 2) / 2; }

inline constexpr bool in_triangle(const Location& x, int d) {
    return x.r >= 0 && x.s >= 0 && x.t >= 0 && x.r + x.s + x.t == d;
}

/// Index of a location in the canonical enumeration: descending r, then
/// ascending t. This order is fixed once and used for all serialized tables.
inline int location_index(const Location& x, int d) {
    if (!in_triangle(x, d)) throw NotInTriangle();
    int before = (d - x.r) * (d - x.r + 1) / 2;
    return before + x.t;
}

inline std::vector<Location> locations(int d) {
    if (d < 0) throw IndexOutOfRange("negative diameter");
    std::vector<Location> out;
    out.reserve(triangle_size(d));
    for (int r = d; r >= 0; --r)
        for (int t = 0; t <= d - r; ++t) out.push_back({r, d - r - t, t});
    return out;
}

struct LocationClass {
    std::optional<int> corner;      // 1, 2 or 3 when the location is a corner
    std::array<bool, 3> boundary{}; // boundary[e-1]: e-coordinate is zero
    bool interior = false;
};

inline LocationClass classify(const Location& x, int d) {
    if (!in_triangle(x, d)) throw NotInTriangle();
    LocationClass c;
    const int coord[3] = {x.r, x.s, x.t};
    for (int e = 0; e < 3; ++e) {
        if (coord[e] == d && d > 0) c.corner = e + 1;
        c.boundary[e] = (coord[e] == 0);
    }
    c.interior = !c.boundary[0] && !c.boundary[1] && !c.boundary[2];
    return c;
}

/// Partition of the triangle into eta-lines (equal eta-coordinate), ordered
/// by coordinate value; the line with coordinate c has d-c+1 locations.
inline std::vector<std::vector<Location>> eta_lines(int d, int eta) {
    if (eta < 1 || eta > 3) throw IndexOutOfRange("eta must be 1, 2 or 3");
    std::vector<std::vector<Location>> lines(static_cast<std::size_t>(d) + 1);
    for (const Location& x : locations(d)) {
        int c = (eta == 1) ? x.r : (eta == 2) ? x.s : x.t;
        lines[static_cast<std::size_t>(c)].push_back(x);
    }
    return lines;
}

inline bool adjacent(const Location& a, const Location& b) {
    Location diff = a - b;
    for (const Location& root : {root_alpha, root_beta, root_gamma})
        if (diff == root || diff == Location{} - root) return true;
    return false;
}

struct BlackClique {
    Location tau;                  // index location in the triangle of diameter d-1
    std::array<Location, 3> cells; // (r+1,s,t), (r,s+1,t), (r,s,t+1)
};

inline std::vector<BlackClique> black_cliques(int d) {
    std::vector<BlackClique> out;
    if (d < 1) return out;
    for (const Location& tau : locations(d - 1))
        out.push_back({tau,
                       {Location{tau.r + 1, tau.s, tau.t},
                        Location{tau.r, tau.s + 1, tau.t},
                        Location{tau.r, tau.s, tau.t + 1}}});
    return out;
}

struct WhiteClique {
    Location tau;  // index location in the triangle of diameter d-2
    Location lambda, mu, nu;
};

/// The white clique indexed by tau, in the fixed cyclic order
/// (lambda, mu, nu) = ((r,s+1,t+1), (r+1,s,t+1), (r+1,s+1,t)). This
/// orientation is the one whose edge-map composition defines "the" B-value.
inline WhiteClique white_clique_at(const Location& tau, int d) {
    if (d < 2) throw DiameterTooSmall("white cliques need diameter >= 2");
    if (!in_triangle(tau, d - 2)) throw NotInTriangle();
    return {tau,
            Location{tau.r, tau.s + 1, tau.t + 1},
            Location{tau.r + 1, tau.s, tau.t + 1},
            Location{tau.r + 1, tau.s + 1, tau.t}};
}

inline std::vector<WhiteClique> white_cliques(int d) {
    std::vector<WhiteClique> out;
    if (d < 2) return out;
    for (const Location& tau : locations(d - 2)) out.push_back(white_clique_at(tau, d));
    return out;
}

/// The unique third vertex completing the edge {a, b} to a black clique.
inline Location completion(const Location& a, const Location& b, int d) {
    if (!in_triangle(a, d) || !in_triangle(b, d)) throw NotInTriangle();
    if (!adjacent(a, b)) throw NotAdjacent();
    // a and b agree in exactly one coordinate; bump it.
    Location c{std::min(a.r, b.r), std::min(a.s, b.s), std::min(a.t, b.t)};
    if (a.r == b.r) c.r += 1;
    else if (a.s == b.s) c.s += 1;
    else c.t += 1;
    return c;
}

/// The six displaced locations around mu. Results may lie outside the
/// triangle; callers apply the det = 1 / value = 1 conventions there.
struct Hexagon {
    Location plus_alpha, plus_beta, plus_gamma;
    Location minus_alpha, minus_beta, minus_gamma;
};

inline constexpr Hexagon hexagon(const Location& mu) {
    return {mu + root_alpha, mu + root_beta, mu + root_gamma,
            mu - root_alpha, mu - root_beta, mu - root_gamma};
}

}  // namespace ba
