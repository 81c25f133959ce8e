#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace rkp {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }
// scalar cross product a_x b_y - a_y b_x
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm2(Vec3 a) { return dot(a, a); }
inline double norm(Vec3 a) { return std::sqrt(norm2(a)); }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline std::complex<double> to_complex(Vec2 a) { return {a.x, a.y}; }
inline Vec2 from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }

/// A point (q,p) of the planar phase space; q must avoid the origin
/// whenever a potential term is evaluated.
struct PhasePoint {
    Vec2 q;
    Vec2 p;
};

/// Energies of the planar problem at one phase point: Kepler energy H,
/// angular momentum L, rotating-frame energy K = H + L, and the
/// effective potential U at q.
struct EnergyBundle {
    double H = 0.0;
    double L = 0.0;
    double K = 0.0;
    double U = 0.0;
};

enum class TrajectoryStatus {
    Complete,
    TruncatedNearCollision,
};

struct Trajectory {
    std::vector<double> times;
    std::vector<PhasePoint> states;
    TrajectoryStatus status = TrajectoryStatus::Complete;
};

/// Closed-form Kepler ellipse with negative energy, evaluated through the
/// eccentric anomaly. `phase` is the mean anomaly at t = 0, `orientation`
/// the in-plane rotation of the periapsis direction.
struct KeplerOrbit {
    double energy = 0.0;        // H < 0
    double eccentricity = 0.0;  // in [0,1)
    double semi_major = 0.0;    // -1/(2H)
    double period = 0.0;        // 2*pi*(-2H)^(-3/2)
    double phase = 0.0;
    double orientation = 0.0;

    PhasePoint at(double t) const;
};

/// A point (x,y) of the cotangent space of the unit sphere embedded in
/// R^3 x R^3: |x| = 1 and x.y = 0 for valid members.
struct SpherePoint {
    Vec3 x;
    Vec3 y;
};

/// A point of the oscillator side of the two-to-one cover, as a complex pair.
struct OscPoint {
    std::complex<double> u;
    std::complex<double> v;
};

/// Orthonormal moving frame (calA, calB) of the sphere-valued
/// regularization map, together with the angle phi and nu = sqrt(-2H).
struct LSFrame {
    Vec3 calA;
    Vec3 calB;
    double phi = 0.0;
    double nu = 0.0;
};

/// Image coordinates of the torus moment map on the oscillator side.
/// The image is the cone |mu2| <= mu1.
struct MomentPair {
    double mu1 = 0.0;
    double mu2 = 0.0;
};

/// First-quadrant moment coordinates on the unrotated side.
struct QPair {
    double nu1 = 0.0;
    double nu2 = 0.0;
};

}  // namespace rkp
