#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/labeled_group.hpp"
#include "hgs/number_theory.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

/// The five isomorphism types of groups of order p^3, p odd.
enum class P3Type { cyc, mix, heis, elem, exp2 };

/// Column order of the degree-p^3 tables: C_{p^3}, C_{p^2}xC_p, H_p, C_p^3, G_p.
inline constexpr std::array<P3Type, 5> kP3Types{P3Type::cyc, P3Type::mix, P3Type::heis,
                                                P3Type::elem, P3Type::exp2};

constexpr std::string_view type_id(P3Type t) noexcept {
  switch (t) {
    case P3Type::cyc: return "CYC";
    case P3Type::mix: return "MIX";
    case P3Type::heis: return "HEIS";
    case P3Type::elem: return "ELEM";
    case P3Type::exp2: return "EXP2";
  }
  return "?";
}

/// Display name at prime p, e.g. "C27", "C9xC3", "H27", "C3^3", "G27" for p = 3.
inline std::string type_name(P3Type t, unsigned p) {
  std::string p3 = std::to_string(p * p * p);
  switch (t) {
    case P3Type::cyc: return "C" + p3;
    case P3Type::mix: return "C" + std::to_string(p * p) + "xC" + std::to_string(p);
    case P3Type::heis: return "H" + p3;
    case P3Type::elem: return "C" + std::to_string(p) + "^3";
    case P3Type::exp2: return "G" + p3;
  }
  return "?";
}

namespace detail {

inline void require_odd_prime(unsigned p) {
  if (p < 3 || !nt::is_prime(p))
    throw Error(ErrorCode::bad_params, std::to_string(p) + " is not an odd prime");
}

inline void require_order_cap(std::uint64_t order, std::size_t cap) {
  if (order > cap)
    throw Error(ErrorCode::cap, "order " + std::to_string(order) + " exceeds cap " +
                                    std::to_string(cap));
}

}  // namespace detail

/// Direct product of cyclic groups with mixed-radix labels: the first modulus is the most
/// significant digit. Generators are the unit vectors in order.
inline LabeledGroup build_cyclic_product(const std::vector<unsigned>& moduli, std::string name,
                                         std::optional<unsigned> prime = std::nullopt,
                                         std::size_t cap = kDefaultDegreeCap) {
  if (moduli.empty()) throw Error(ErrorCode::bad_params, "no factors");
  std::uint64_t order = 1;
  for (unsigned m : moduli) {
    if (m == 0) throw Error(ErrorCode::bad_params, "zero modulus");
    order *= m;
  }
  detail::require_order_cap(order, cap);
  std::vector<std::uint64_t> weight(moduli.size(), 1);
  for (std::size_t i = moduli.size(); i-- > 1;) weight[i - 1] = weight[i] * moduli[i];
  auto rule = [&](label_t a, label_t b) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      std::uint64_t da = a / weight[i] % moduli[i];
      std::uint64_t db = b / weight[i] % moduli[i];
      r += (da + db) % moduli[i] * weight[i];
    }
    return static_cast<label_t>(r);
  };
  std::vector<label_t> gens;
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (moduli[i] > 1) gens.push_back(static_cast<label_t>(weight[i]));
  return LabeledGroup(std::move(name), order, rule, gens, prime);
}

inline LabeledGroup build_cyclic(unsigned p, unsigned n, std::size_t cap = kDefaultDegreeCap) {
  detail::require_odd_prime(p);
  if (n == 0) throw Error(ErrorCode::bad_params, "exponent must be positive");
  auto order = nt::ipow(p, n);
  detail::require_order_cap(order, cap);
  return build_cyclic_product({static_cast<unsigned>(order)}, "C" + std::to_string(order), p, cap);
}

/// C_{p^2} x C_p = <a> x <b>, label of a^i b^j is i*p + j; generators a (label p), b (label 1).
inline LabeledGroup build_mixed(unsigned p, std::size_t cap = kDefaultDegreeCap) {
  detail::require_odd_prime(p);
  return build_cyclic_product({p * p, p}, type_name(P3Type::mix, p), p, cap);
}

/// C_p^3 as F_p^3, label of (x, y, z) is x*p^2 + y*p + z.
inline LabeledGroup build_elementary(unsigned p, std::size_t cap = kDefaultDegreeCap) {
  detail::require_odd_prime(p);
  return build_cyclic_product({p, p, p}, type_name(P3Type::elem, p), p, cap);
}

/// Upper unitriangular 3x3 matrices over F_p; (a, b, c) is the matrix with a at (1,2),
/// b at (1,3), c at (2,3), labelled a*p^2 + b*p + c. Generators A = (1,0,0), C = (0,0,1).
inline LabeledGroup build_heisenberg(unsigned p, std::size_t cap = kDefaultDegreeCap) {
  detail::require_odd_prime(p);
  detail::require_order_cap(std::uint64_t{p} * p * p, cap);
  auto rule = [p](label_t x, label_t y) {
    unsigned a1 = x / (p * p), b1 = x / p % p, c1 = x % p;
    unsigned a2 = y / (p * p), b2 = y / p % p, c2 = y % p;
    unsigned a = (a1 + a2) % p, b = (b1 + b2 + a1 * c2) % p, c = (c1 + c2) % p;
    return static_cast<label_t>(a * p * p + b * p + c);
  };
  return LabeledGroup(type_name(P3Type::heis, p), p * p * p, rule,
                      {static_cast<label_t>(p * p), static_cast<label_t>(1)}, p);
}

/// Matrices ((1+pb, a), (0, 1)) over Z/p^2Z with a mod p^2, b mod p, labelled a*p + b.
/// Generators M = (a=1, b=0) of order p^2 and N = (a=0, b=1) of order p.
inline LabeledGroup build_exp_p2(unsigned p, std::size_t cap = kDefaultDegreeCap) {
  detail::require_odd_prime(p);
  detail::require_order_cap(std::uint64_t{p} * p * p, cap);
  unsigned q = p * p;
  auto rule = [p, q](label_t x, label_t y) {
    unsigned a1 = x / p, b1 = x % p;
    unsigned a2 = y / p, b2 = y % p;
    unsigned a = (a1 + (1 + p * b1) * a2) % q;
    unsigned b = (b1 + b2) % p;
    return static_cast<label_t>(a * p + b);
  };
  return LabeledGroup(type_name(P3Type::exp2, p), q * p, rule,
                      {static_cast<label_t>(p), static_cast<label_t>(1)}, p);
}

inline LabeledGroup build_p3(P3Type t, unsigned p, std::size_t cap = kDefaultDegreeCap) {
  switch (t) {
    case P3Type::cyc: return build_cyclic(p, 3, cap);
    case P3Type::mix: return build_mixed(p, cap);
    case P3Type::heis: return build_heisenberg(p, cap);
    case P3Type::elem: return build_elementary(p, cap);
    case P3Type::exp2: return build_exp_p2(p, cap);
  }
  throw Error(ErrorCode::bad_params, "unknown type");
}

/// Left-regular representation on the labels, base point 0.
inline PointedGroup regular_representation(const LabeledGroup& n,
                                           std::size_t cap = kDefaultDegreeCap) {
  check_degree(n.order(), cap);
  std::vector<Permutation> gens;
  for (label_t g : n.generators()) gens.push_back(n.left_translation(g));
  if (gens.empty()) gens.push_back(Permutation::identity(n.order()));
  return PointedGroup(PermGroup(std::move(gens)), 0, n.name());
}

/// Data fixing Hol(C_{p^n}) = Z/p^n ⋊ (Z/p^n)^*: sigma is multiplication by a generator
/// of the unit group, tau = sigma^(p-1), k = sigma(1).
struct CyclicHolomorphFrame {
  unsigned p;
  unsigned n;
  std::uint64_t modulus;
  std::uint64_t sigma;  // multiplier of sigma
  std::uint64_t tau;    // multiplier of tau
  std::uint64_t k;

  static CyclicHolomorphFrame make(unsigned p, unsigned n) {
    detail::require_odd_prime(p);
    if (n == 0) throw Error(ErrorCode::bad_params, "n must be positive");
    CyclicHolomorphFrame f{p, n, nt::ipow(p, n), 0, 0, 0};
    f.sigma = nt::primitive_root_mod_p2(p) % f.modulus;
    if (f.modulus == p) {
      // Z/pZ: primitive root mod p^2 is still one mod p
    }
    f.tau = nt::mod_pow(f.sigma, p - 1, f.modulus);
    f.k = f.sigma;
    return f;
  }

  std::uint64_t unit_group_order() const { return modulus / p * (p - 1); }

  Permutation translation(std::uint64_t m = 1) const {
    std::vector<point_t> v(modulus);
    for (std::uint64_t x = 0; x < modulus; ++x) v[x] = static_cast<point_t>((x + m) % modulus);
    return Permutation(std::move(v));
  }

  Permutation multiplication(std::uint64_t unit) const {
    std::vector<point_t> v(modulus);
    for (std::uint64_t x = 0; x < modulus; ++x) v[x] = static_cast<point_t>(x * unit % modulus);
    return Permutation(std::move(v));
  }
};

/// C_{p^n} ⋊ C_D realized as <(1, Id), (0, sigma^l)> inside Hol(C_{p^n}) acting on p^n
/// points, with l = p^(n-1)(p-1)/D. Base point 0.
inline PointedGroup build_cpn_semidirect(unsigned p, unsigned n, std::uint64_t d_order,
                                         std::size_t cap = kDefaultDegreeCap) {
  auto frame = CyclicHolomorphFrame::make(p, n);
  check_degree(frame.modulus, cap);
  std::uint64_t units = frame.unit_group_order();
  if (d_order == 0 || units % d_order != 0)
    throw Error(ErrorCode::bad_params, "D = " + std::to_string(d_order) + " does not divide " +
                                           std::to_string(units));
  std::uint64_t l = units / d_order;
  std::uint64_t mult = nt::mod_pow(frame.sigma, l, frame.modulus);
  std::vector<Permutation> gens{frame.translation(1)};
  if (d_order > 1) gens.push_back(frame.multiplication(mult));
  std::string name = "C" + std::to_string(frame.modulus);
  if (d_order > 1) name += ":C" + std::to_string(d_order);
  return PointedGroup(PermGroup(std::move(gens)), 0, name);
}

/// Automorphisms of C_{p^2} x C_p = <a> x <b> used to build P1 and to check its
/// normality: phi1: a->a^(p+1); phi2: b->a^p b; phi3: a->ab; psi1: a->a^i; psi2: b->b^l,
/// with i of order p-1 mod p^2 and l of order p-1 mod p. Permutations of the MIX labels.
struct MixedAutomorphisms {
  Permutation phi1, phi2, phi3, psi1, psi2;
  std::uint64_t i, l;
};

/// Endomorphism of C_{p^2} x C_p (MIX labels) fixed by the images of a and b.
inline Permutation mixed_map(const LabeledGroup& mixed, label_t image_a, label_t image_b) {
  unsigned p = *mixed.prime();
  std::vector<point_t> v(mixed.order());
  for (std::size_t x = 0; x < mixed.order(); ++x) {
    unsigned i = static_cast<unsigned>(x / p), j = static_cast<unsigned>(x % p);
    v[x] = mixed.mul(mixed.pow(image_a, i), mixed.pow(image_b, j));
  }
  return Permutation(std::move(v));
}

inline MixedAutomorphisms mixed_automorphisms(unsigned p) {
  auto g = build_mixed(p);
  auto a = static_cast<label_t>(p);
  label_t b = 1;
  std::uint64_t root = nt::primitive_root_mod_p2(p);
  std::uint64_t i = nt::mod_pow(root, p, std::uint64_t{p} * p);
  std::uint64_t l = root % p;
  return {mixed_map(g, g.pow(a, p + 1), b),
          mixed_map(g, a, g.mul(g.pow(a, p), b)),
          mixed_map(g, g.mul(a, b), b),
          mixed_map(g, g.pow(a, i), b),
          mixed_map(g, a, g.pow(b, l)),
          i,
          l};
}

/// P1 = <a, b> ⋊ <phi1, phi2, phi3> inside Hol(C_{p^2} x C_p), on the MIX labels.
inline PermGroup build_P1(unsigned p, std::size_t cap = kDefaultEnumerationCap) {
  detail::require_odd_prime(p);
  detail::require_order_cap(nt::ipow(p, 6), cap);
  auto g = build_mixed(p);
  auto aut = mixed_automorphisms(p);
  return PermGroup({g.left_translation(static_cast<label_t>(p)), g.left_translation(1), aut.phi1,
                    aut.phi2, aut.phi3});
}

/// P2 = F_p^3 ⋊ H_p inside Hol(C_p^3): translations and upper unitriangular matrices
/// acting on column vectors (x, y, z), labelled x*p^2 + y*p + z.
inline PermGroup build_P2(unsigned p, std::size_t cap = kDefaultEnumerationCap) {
  detail::require_odd_prime(p);
  detail::require_order_cap(nt::ipow(p, 6), cap);
  auto g = build_elementary(p);
  unsigned q = p * p * p;
  auto matrix = [&](unsigned a, unsigned b, unsigned c) {
    std::vector<point_t> v(q);
    for (unsigned s = 0; s < q; ++s) {
      unsigned x = s / (p * p), y = s / p % p, z = s % p;
      unsigned nx = (x + a * y + b * z) % p, ny = (y + c * z) % p;
      v[s] = static_cast<point_t>(nx * p * p + ny * p + z);
    }
    return Permutation(std::move(v));
  };
  return PermGroup({g.left_translation(static_cast<label_t>(p * p)),
                    g.left_translation(static_cast<label_t>(p)), g.left_translation(1),
                    matrix(1, 0, 0), matrix(0, 0, 1)});
}

namespace detail {

inline unsigned p3_prime(std::uint64_t order) {
  auto pp = nt::prime_power(order);
  if (!pp || pp->second != 3 || pp->first == 2)
    throw Error(ErrorCode::not_order_p3, "order " + std::to_string(order) + " is not p^3, p odd");
  return pp->first;
}

inline P3Type classify(unsigned p, bool abelian, std::uint64_t exp) {
  if (exp == std::uint64_t{p} * p * p) return P3Type::cyc;
  if (abelian) return exp == p ? P3Type::elem : P3Type::mix;
  return exp == p ? P3Type::heis : P3Type::exp2;
}

}  // namespace detail

inline P3Type classify_p3_type(const LabeledGroup& g) {
  unsigned p = detail::p3_prime(g.order());
  return detail::classify(p, g.is_abelian(), g.exponent());
}

inline P3Type classify_p3_type(const PermGroup& g) {
  unsigned p = detail::p3_prime(g.order());
  return detail::classify(p, is_abelian(g), exponent(g));
}

}  // namespace hgs
