#pragma once

// Independent straight-line transcription of the total-moment formula,
// written against plain double[3] arrays with its own cross product and an
// explicit axis-angle rotation matrix. Kept free of any srlplan vector or
// dynamics code on purpose: it is the oracle the library is checked against.

#include <cmath>
#include <cstddef>
#include <vector>

namespace moment_oracle {

struct Limb {
    double mount[3];
    double axis[3];   // unit
    double zero[3];   // unit, perpendicular to axis
    double length;
    double mass;
};

struct State {
    double angle;
    double velocity;
    double acceleration;
};

inline void cross3(const double a[3], const double b[3], double out[3]) {
    out[0] = a[1] * b[2] - a[2] * b[1];
    out[1] = a[2] * b[0] - a[0] * b[2];
    out[2] = a[0] * b[1] - a[1] * b[0];
}

// Rotation about a unit axis by angle, as an explicit 3x3 matrix
// R = cos*I + sin*[k]_x + (1-cos)*k k^T, applied to v.
inline void rotate3(const double k[3], double angle, const double v[3], double out[3]) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    double R[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) R[i][j] = (1.0 - c) * k[i] * k[j];
    R[0][0] += c;
    R[1][1] += c;
    R[2][2] += c;
    R[0][1] += -s * k[2];
    R[0][2] += s * k[1];
    R[1][0] += s * k[2];
    R[1][2] += -s * k[0];
    R[2][0] += -s * k[1];
    R[2][1] += s * k[0];
    for (int i = 0; i < 3; ++i)
        out[i] = R[i][0] * v[0] + R[i][1] * v[1] + R[i][2] * v[2];
}

// Sum over limbs of r_i x (m_i*g + m_i*a_i), with r_i measured from the
// reference point and a_i the COM acceleration in the body frame.
inline void total_moment(const std::vector<Limb>& limbs, const std::vector<State>& states,
                         const double reference[3], const double gravity[3], double out[3]) {
    out[0] = out[1] = out[2] = 0.0;
    for (std::size_t i = 0; i < limbs.size(); ++i) {
        const Limb& limb = limbs[i];
        const State& st = states[i];

        double dir[3];
        rotate3(limb.axis, st.angle, limb.zero, dir);
        double com[3], r[3], rho[3];
        for (int c = 0; c < 3; ++c) {
            com[c] = limb.mount[c] + limb.length * dir[c];
            r[c] = com[c] - reference[c];
            rho[c] = com[c] - limb.mount[c];
        }

        double omega[3], alpha[3];
        for (int c = 0; c < 3; ++c) {
            omega[c] = st.velocity * limb.axis[c];
            alpha[c] = st.acceleration * limb.axis[c];
        }
        double a_tangential[3], v_lin[3], a_centripetal[3];
        cross3(alpha, rho, a_tangential);
        cross3(omega, rho, v_lin);
        cross3(omega, v_lin, a_centripetal);

        double force[3];
        for (int c = 0; c < 3; ++c)
            force[c] = limb.mass * gravity[c] +
                       limb.mass * (a_tangential[c] + a_centripetal[c]);
        double term[3];
        cross3(r, force, term);
        for (int c = 0; c < 3; ++c) out[c] += term[c];
    }
}

inline double norm3(const double v[3]) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace moment_oracle
