#include "nodallab/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nodallab/quad.hpp"

namespace nodallab {

SU2Element::SU2Element(std::complex<double> a, std::complex<double> b) : a_(a), b_(b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 2e-14)
        throw DomainError("SU2Element: determinant |a|^2 + |b|^2 must be 1");
}

SU2Element SU2Element::from_quaternion(const std::array<double, 4>& q) {
    return SU2Element({q[0], q[1]}, {q[2], q[3]});
}

std::array<double, 4> SU2Element::to_quaternion() const {
    return {a_.real(), a_.imag(), b_.real(), b_.imag()};
}

CVec2 SU2Element::apply(const CVec2& v) const {
    return {a_ * v[0] - std::conj(b_) * v[1], b_ * v[0] + std::conj(a_) * v[1]};
}

double SU2Element::det_defect() const { return std::abs(std::norm(a_) + std::norm(b_) - 1.0); }

std::complex<double> hermitian_inner(const CVec2& x, const CVec2& y) {
    return x[0] * std::conj(y[0]) + x[1] * std::conj(y[1]);
}

namespace {

std::array<double, 4> normalized4(std::array<double, 4> q) {
    const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    for (double& c : q) c /= n;
    return q;
}

} // namespace

OrbitCertificate orbit_meets_hyperplane(const CVec2& v, const CVec2& h, Rng& rng,
                                        int max_restarts) {
    const double vn = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    const double hn = std::sqrt(std::norm(h[0]) + std::norm(h[1]));
    if (vn == 0.0 || hn == 0.0) throw DomainError("orbit_meets_hyperplane: zero vector");
    const double scale = vn * hn;

    // <g(q) v, h> is linear in the quaternion coordinates of g, so the objective is the
    // quadratic form q^T M q with M_ij = Re(c_i conj(c_j)).
    std::array<std::complex<double>, 4> c;
    for (int i = 0; i < 4; ++i) {
        std::array<double, 4> e{};
        e[i] = 1.0;
        const CVec2 gv = {std::complex<double>(e[0], e[1]) * v[0] -
                              std::complex<double>(e[2], -e[3]) * v[1],
                          std::complex<double>(e[2], e[3]) * v[0] +
                              std::complex<double>(e[0], -e[1]) * v[1]};
        c[i] = hermitian_inner(gv, h);
    }
    double M[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) M[i][j] = (c[i] * std::conj(c[j])).real();

    // Evaluate the residual through the linear form: the quadratic form q^T M q
    // cancels catastrophically near the null space and cannot resolve below
    // ~1e-16 * scale^2.
    const auto objective = [&](const std::array<double, 4>& q) {
        std::complex<double> r = 0.0;
        for (int i = 0; i < 4; ++i) r += q[i] * c[i];
        return std::norm(r);
    };
    const double target = 1e-10 * scale;
    const double f_target = 0.25 * target * target;

    int total_iters = 0;
    for (int restart = 0; restart < max_restarts; ++restart) {
        auto q = rng.unit_quaternion();
        double f = objective(q);
        double eta = 1.0;
        int it = 0;
        for (; it < 20000 && f > f_target; ++it) {
            std::array<double, 4> g{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) g[i] += 2.0 * M[i][j] * q[j];
            double gq = 0.0;
            for (int i = 0; i < 4; ++i) gq += g[i] * q[i];
            std::array<double, 4> gt;
            double gnorm2 = 0.0;
            for (int i = 0; i < 4; ++i) {
                gt[i] = g[i] - gq * q[i];
                gnorm2 += gt[i] * gt[i];
            }
            if (gnorm2 < 1e-32) break;
            // Backtracking on the projected step.
            bool moved = false;
            for (int bt = 0; bt < 60; ++bt) {
                std::array<double, 4> trial;
                for (int i = 0; i < 4; ++i) trial[i] = q[i] - eta * gt[i];
                trial = normalized4(trial);
                const double ft = objective(trial);
                if (ft <= f - 0.25 * eta * gnorm2) {
                    q = trial;
                    f = ft;
                    eta *= 1.5;
                    moved = true;
                    break;
                }
                eta *= 0.5;
            }
            if (!moved) break;
        }
        total_iters += it;
        const double resid = std::sqrt(std::max(0.0, f));
        if (resid < target) {
            OrbitCertificate cert;
            cert.g = SU2Element::from_quaternion(q);
            cert.residual = resid / scale;
            cert.restarts_used = restart;
            cert.iterations = total_iters;
            return cert;
        }
    }
    throw SearchFailureError("orbit_meets_hyperplane: descent failed after " +
                             std::to_string(max_restarts) + " restarts");
}

SO3Action::SO3Action(int degree) : degree_(degree) {
    if (degree < 1) throw DomainError("SO3Action: degree must be >= 1");
    if (degree > kMaxActionDegree)
        throw ResourceError("SO3Action: degree above conditioning cap " +
                            std::to_string(kMaxActionDegree));
    const auto& rule = gauss_rule(degree + 2);
    nodes_x_ = rule.nodes;
    weights_x_ = rule.weights;
    nphi_ = 4 * degree + 8;

    // Generators: (L_k)_{m' m} = Int Y_{m'}(p) * (-(e_k x p) . grad Y_m(p)) dsigma.
    const int d = dim();
    for (auto& g : gen_) g.assign(static_cast<std::size_t>(d) * d, 0.0);
    const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<double> val, dth, dph;
    for (std::size_t ix = 0; ix < nodes_x_.size(); ++ix) {
        const double theta = std::acos(std::clamp(nodes_x_[ix], -1.0, 1.0));
        for (int jp = 0; jp < nphi_; ++jp) {
            const double phi = 2.0 * kPi * jp / nphi_;
            const auto p = SpherePoint::from_angles(theta, phi);
            Eigenfunction::basis_jets(degree_, p, val, dth, dph);
            const double s = std::sin(theta);
            const Vec3 e_theta{std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi),
                               -s};
            const Vec3 e_phi{-std::sin(phi), std::cos(phi), 0.0};
            const double wgt = weights_x_[ix] * (2.0 * kPi / nphi_);
            for (int k = 0; k < 3; ++k) {
                const Vec3 field = cross(axes[k], p.vec());
                const double ft = dot(field, e_theta), fp = dot(field, e_phi);
                for (int m = 0; m < d; ++m) {
                    const double dm = -(ft * dth[m] + fp * dph[m]);
                    for (int mp = 0; mp < d; ++mp)
                        gen_[k][static_cast<std::size_t>(mp) * d + m] += wgt * val[mp] * dm;
                }
            }
        }
    }
}

std::vector<double> SO3Action::apply(const Rot3& R, std::span<const double> coeffs) const {
    if (static_cast<int>(coeffs.size()) != dim())
        throw DomainError("SO3Action::apply: coefficient size mismatch");
    const Rot3 Rt = R.transpose();
    std::vector<double> out(dim(), 0.0);
    std::vector<double> val;
    for (std::size_t ix = 0; ix < nodes_x_.size(); ++ix) {
        const double theta = std::acos(std::clamp(nodes_x_[ix], -1.0, 1.0));
        for (int jp = 0; jp < nphi_; ++jp) {
            const double phi = 2.0 * kPi * jp / nphi_;
            const auto p = SpherePoint::from_angles(theta, phi);
            const auto pr = SpherePoint::normalized(Rt.apply(p.vec()));
            const auto fval_basis = Eigenfunction::basis_values(degree_, pr);
            double fval = 0.0;
            for (int m = 0; m < dim(); ++m) fval += coeffs[m] * fval_basis[m];
            val = Eigenfunction::basis_values(degree_, p);
            const double wgt = weights_x_[ix] * (2.0 * kPi / nphi_);
            for (int m = 0; m < dim(); ++m) out[m] += wgt * val[m] * fval;
        }
    }
    return out;
}

std::vector<double> SO3Action::matrix(const Rot3& R) const {
    const int d = dim();
    std::vector<double> mat(static_cast<std::size_t>(d) * d, 0.0);
    std::vector<double> basis(d, 0.0);
    for (int m = 0; m < d; ++m) {
        basis.assign(d, 0.0);
        basis[m] = 1.0;
        const auto col = apply(R, basis);
        for (int mp = 0; mp < d; ++mp) mat[static_cast<std::size_t>(mp) * d + m] = col[mp];
    }
    return mat;
}

namespace {

double dot_n(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<double> unit_of(std::span<const double> x) {
    std::vector<double> out(x.begin(), x.end());
    const double n = std::sqrt(dot_n(out, out));
    if (n == 0.0) throw DomainError("codim2_orbit_meets: zero vector");
    for (double& c : out) c /= n;
    return out;
}

std::vector<double> mat_vec(const std::vector<double>& m, std::span<const double> x) {
    const int d = static_cast<int>(x.size());
    std::vector<double> out(d, 0.0);
    for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int j = 0; j < d; ++j) s += m[static_cast<std::size_t>(i) * d + j] * x[j];
        out[i] = s;
    }
    return out;
}

} // namespace

Codim2Certificate codim2_orbit_meets(const SO3Action& action, std::span<const double> x,
                                     std::span<const double> y, std::span<const double> z,
                                     Rng& rng, int max_restarts) {
    const auto xu = unit_of(x), yu = unit_of(y), zu = unit_of(z);
    if (std::abs(dot_n(yu, zu)) > 1e-10)
        throw DomainError("codim2_orbit_meets: y and z must be orthogonal");

    const auto uv_at = [&](const Rot3& R, std::vector<double>& s) {
        s = action.apply(R, xu);
        return std::array<double, 2>{dot_n(s, yu), dot_n(s, zu)};
    };

    for (int restart = 0; restart < max_restarts; ++restart) {
        Rot3 R = rng.rotation();
        std::vector<double> s;
        auto r = uv_at(R, s);
        double f = r[0] * r[0] + r[1] * r[1];

        // Projected gradient with backtracking, stepping through exp on the group.
        double eta = 0.1;
        for (int it = 0; it < 400 && f > 1e-24; ++it) {
            Vec3 grad{};
            double* gp = &grad.x;
            for (int k = 0; k < 3; ++k) {
                const auto ls = mat_vec(action.generator(k), s);
                gp[k] = 2.0 * (r[0] * dot_n(ls, yu) + r[1] * dot_n(ls, zu));
            }
            const double gn2 = dot(grad, grad);
            if (gn2 < 1e-30) break;
            bool moved = false;
            for (int bt = 0; bt < 40; ++bt) {
                const Rot3 trial = Rot3::exp(grad * -eta).compose(R);
                std::vector<double> st;
                const auto rt = uv_at(trial, st);
                const double ft = rt[0] * rt[0] + rt[1] * rt[1];
                if (ft <= f - 0.25 * eta * gn2) {
                    R = trial;
                    s = st;
                    r = rt;
                    f = ft;
                    eta *= 1.5;
                    moved = true;
                    break;
                }
                eta *= 0.5;
            }
            if (!moved) break;
        }

        // Gauss-Newton polish on the residual pair.
        for (int it = 0; it < 40 && std::max(std::abs(r[0]), std::abs(r[1])) > 1e-12; ++it) {
            double J[2][3];
            for (int k = 0; k < 3; ++k) {
                const auto ls = mat_vec(action.generator(k), s);
                J[0][k] = dot_n(ls, yu);
                J[1][k] = dot_n(ls, zu);
            }
            // Least-norm step: w = -J^T (J J^T)^{-1} r.
            double A = 0, B = 0, C = 0;
            for (int k = 0; k < 3; ++k) {
                A += J[0][k] * J[0][k];
                B += J[0][k] * J[1][k];
                C += J[1][k] * J[1][k];
            }
            const double det = A * C - B * B;
            if (std::abs(det) < 1e-18) break;
            const double a1 = (-C * r[0] + B * r[1]) / det;
            const double a2 = (B * r[0] - A * r[1]) / det;
            Vec3 w{};
            double* wp = &w.x;
            for (int k = 0; k < 3; ++k) wp[k] = a1 * J[0][k] + a2 * J[1][k];
            if (norm(w) > 0.5) w = w * (0.5 / norm(w));
            R = Rot3::exp(w).compose(R);
            r = uv_at(R, s);
        }

        if (std::max(std::abs(r[0]), std::abs(r[1])) < 1e-8) {
            Codim2Certificate cert;
            cert.g = R;
            cert.residual_y = std::abs(r[0]);
            cert.residual_z = std::abs(r[1]);
            cert.restarts_used = restart;
            return cert;
        }
    }
    throw SearchFailureError("codim2_orbit_meets: descent failed after " +
                             std::to_string(max_restarts) + " restarts");
}

double counterexample_min(long long resolution) {
    if (resolution < 4) throw DomainError("counterexample_min: resolution too small");
    const long long n = std::max(2LL, static_cast<long long>(std::sqrt(static_cast<double>(resolution))));
    double best = std::numeric_limits<double>::infinity();
    for (long long i = 0; i <= n; ++i) {
        const double theta = kPi * static_cast<double>(i) / static_cast<double>(n);
        for (long long j = 0; j < n; ++j) {
            const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
            const Vec3 y{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                         std::cos(theta)};
            const double l0 = y.z;
            const double q0 = y.x * y.x + y.y * y.y - 2.0 * y.z * y.z;
            best = std::min(best, std::max(std::abs(l0), std::abs(q0)));
        }
    }
    return best;
}

} // namespace nodallab
