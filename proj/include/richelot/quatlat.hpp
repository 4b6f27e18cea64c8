#pragma once
// Hurwitz-quaternion arithmetic, the hermitian pairing attached to the
// 2x2 matrix M = [[2, 1+i], [1-i, 2]], enumeration of the unitary group
// { A : A* M A = M } over the Hurwitz order, its reduction modulo the
// two-sided prime above 2 onto SL2(F4), and the coset counts used by the
// isogeny census.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace richelot::qt {

struct NotUnitary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (w + x·i + y·j + z·ij)/2 with w, x, y, z integers of equal parity:
// all even is an integral quaternion, all odd a half-integer element.
struct HurwitzQuat {
    std::int64_t w = 0, x = 0, y = 0, z = 0;
    auto operator<=>(const HurwitzQuat&) const = default;
};

HurwitzQuat quat_from_int(std::int64_t n);
bool parity_ok(const HurwitzQuat& q);
HurwitzQuat quat_add(const HurwitzQuat& p, const HurwitzQuat& q);
HurwitzQuat quat_neg(const HurwitzQuat& p);
HurwitzQuat quat_mul(const HurwitzQuat& p, const HurwitzQuat& q);
HurwitzQuat quat_conj(const HurwitzQuat& p);
std::int64_t quat_nrd(const HurwitzQuat& p); // (w²+x²+y²+z²)/4

struct QuatMat2 {
    // row-major entries
    HurwitzQuat e00, e01, e10, e11;
    auto operator<=>(const QuatMat2&) const = default;
};

QuatMat2 mat_identity();
QuatMat2 mat_scalar(std::int64_t n);
QuatMat2 mat_mul(const QuatMat2& a, const QuatMat2& b);
QuatMat2 mat_conj_transpose(const QuatMat2& a);

// M and its complement M′ with M·M′ = M′·M = 2·identity, M hermitian
std::pair<QuatMat2, QuatMat2> build_M();

// all Hurwitz elements of reduced norm ≤ bound, in a fixed scan order
std::vector<HurwitzQuat> quats_with_nrd_at_most(int bound);

// h(u, v) = u* M v for column vectors u = (u1, u2), v = (v1, v2)
HurwitzQuat hermitian_pairing(const HurwitzQuat& u1, const HurwitzQuat& u2,
                              const HurwitzQuat& v1, const HurwitzQuat& v2);

bool is_unitary(const QuatMat2& a);

// All 1920 matrices preserving the pairing: columns of h-norm 2 paired so
// that h(col1, col2) = 1 + i, each result rechecked by direct A*MA = M
// multiplication.  jobs selects the OpenMP kernel; the _reference variant
// is the plain serial loop.
std::vector<QuatMat2> unitary_group(int jobs);
std::vector<QuatMat2> unitary_group_reference();

// F4 as 2-bit values b1·ω + b0 with ω² = ω + 1
using F4 = std::uint8_t;
F4 f4_add(F4 a, F4 b);
F4 f4_mul(F4 a, F4 b);

struct SL2F4Elem {
    F4 a = 0, b = 0, c = 0, d = 0; // [[a, b], [c, d]]
    auto operator<=>(const SL2F4Elem&) const = default;
};

F4 sl2_det(const SL2F4Elem& m);
SL2F4Elem sl2_mul(const SL2F4Elem& x, const SL2F4Elem& y);
SL2F4Elem sl2_identity();

// The fixed surjection of the Hurwitz order onto F4 ≅ O/p (p the two-sided
// prime above 2): 1, i, j ↦ 1 and (1+i+j+ij)/2 ↦ ω.  Kernel = elements of
// even reduced norm.
F4 reduce_quat(const HurwitzQuat& q);
// entry-wise reduction; throws NotUnitary unless A* M A = M
SL2F4Elem reduce_mod_p(const QuatMat2& A);

struct CosetCounts {
    std::size_t double_GG = 0;                // kernel double cosets in Γ
    std::vector<std::size_t> left_5;          // per order-5 subgroup (6)
    std::vector<std::size_t> double_55;       // per ordered pair (36)
};

// counts computed exhaustively: the kernel-double-coset count inside the
// 1920-element group, and the order-5 subgroup coset counts inside SL2(F4)
CosetCounts coset_counts();

} // namespace richelot::qt
