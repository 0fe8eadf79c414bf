#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hgs/byott.hpp"
#include "hgs/catalog.hpp"
#include "hgs/holomorph.hpp"
#include "hgs/perm_group.hpp"
#include "hgs/reference_table.hpp"
#include "hgs/transgrp.hpp"

namespace hgs {

struct CheckItem {
  std::string name;
  std::string measured;
  std::string expected;
  std::string provenance;  // "formula", "table", "structural"
  bool pass = false;
};

struct CheckReport {
  std::string id;
  std::string params;
  std::vector<CheckItem> items;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return !items.empty();
  }

  void expect(std::string name, std::uint64_t measured, std::uint64_t expected,
              std::string provenance = "formula") {
    items.push_back({std::move(name), std::to_string(measured), std::to_string(expected),
                     std::move(provenance), measured == expected});
  }

  void expect_true(std::string name, bool ok, std::string provenance = "structural") {
    items.push_back({std::move(name), ok ? "true" : "false", "true", std::move(provenance), ok});
  }
};

inline std::string format_report(const CheckReport& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS " : "FAIL ") << r.id << " (" << r.params << ")\n";
  for (const auto& i : r.items)
    out << "  [" << (i.pass ? "ok" : "XX") << "] " << i.name << ": " << i.measured
        << " (expected " << i.expected << ", " << i.provenance << ")\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

namespace detail {

class Timer {
 public:
  explicit Timer(CheckReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  CheckReport& r_;
  std::chrono::steady_clock::time_point start_;
};

inline std::string pstr(unsigned p) { return "p=" + std::to_string(p); }

inline std::uint64_t count_orders(const OrderCensus& c, std::uint64_t order) {
  auto it = c.find(order);
  return it == c.end() ? 0 : it->second;
}

}  // namespace detail

/// Transitive subgroups of Hol(C_{p^n}) contain an element of order p^n; structure of its
/// Sylow subgroup and the subgroup F; for p = 3, n = 3 no noncyclic holomorph has an
/// element of order 27.
inline CheckReport verify_prop_pn(unsigned p, unsigned n) {
  CheckReport r{"prop-pn", detail::pstr(p) + " n=" + std::to_string(n), {}, {}, 0};
  detail::Timer timer(r);
  auto frame = CyclicHolomorphFrame::make(p, n);
  std::uint64_t q = frame.modulus;
  std::uint64_t q1 = q / p;
  auto hol = cyclic_holomorph(frame);
  r.expect("|Hol(C_p^n)|", hol.order(), q * q1 * (p - 1));
  auto hol_census = order_census(hol);
  r.expect("elements of order p^n in Hol", detail::count_orders(hol_census, q), q1 * q1 * (p - 1));

  auto stab = stabilizer_generators(PointedGroup(hol, 0, "Hol"));
  r.expect("|Stab(0)|", PermGroup(stab).order(), q1 * (p - 1));

  auto syl = sylow_p_of_cyclic_holomorph(frame);
  const auto& syl_el = syl.elements();
  r.expect("|Syl_p(Hol)|", syl_el.size(), q * q1);
  r.expect("elements of order p^n in Syl_p", detail::count_orders(order_census(syl), q),
           (q - q1) * q1);

  std::vector<Permutation> f_elements;
  for (std::size_t i = 0; i < syl_el.size(); ++i)
    if (element_order(syl_el[i]) < q) f_elements.push_back(syl_el.perm(i));
  auto f_group = PermGroup(f_elements);
  r.expect("|F| (elements of order < p^n form a subgroup)", f_group.order(), f_elements.size(),
           "structural");
  r.expect("|F|", f_elements.size(), q1 * q1);
  r.expect("orbit of 0 under F", orbit(f_group, 0).size(), q1);

  auto subs = all_subgroups(hol);
  const auto& el = hol.elements();
  std::uint64_t transitive = 0, lacking = 0, cyclic_top = 0;
  for (const auto& s : subs) {
    std::vector<bool> hit(q, false);
    std::size_t reached = 0;
    bool has_top = false;
    for (auto id : s.members) {
      point_t y = el[id][0];
      if (!hit[y]) {
        hit[y] = true;
        ++reached;
      }
      has_top = has_top || element_order(el[id]) == q;
    }
    if (s.order() == q && has_top) ++cyclic_top;
    if (reached != q) continue;
    ++transitive;
    if (!has_top) ++lacking;
  }
  r.expect("transitive subgroups without an element of order p^n", lacking, 0, "structural");
  r.expect("cyclic subgroups of order p^n", cyclic_top, q1);
  r.notes.push_back(std::to_string(subs.size()) + " subgroups, " + std::to_string(transitive) +
                    " transitive");

  if (p == 3 && n == 3) {
    for (auto t : {P3Type::mix, P3Type::elem, P3Type::heis, P3Type::exp2}) {
      auto h = holomorph(build_p3(t, p));
      r.expect("elements of order 27 in Hol(" + type_name(t, p) + ")",
               detail::count_orders(order_census(h.group()), q), 0);
    }
  }
  return r;
}

/// Cyclic-type counts: p^(n-1) for Galois C_{p^n}, 1 for C_{p^n} ⋊ C_D with 1 < D | p-1.
inline CheckReport verify_prop_pn2(unsigned p, unsigned n, TargetCache* cache = nullptr) {
  CheckReport r{"prop-pn2", detail::pstr(p) + " n=" + std::to_string(n), {}, {}, 0};
  detail::Timer timer(r);
  TargetCache local;
  TargetCache& tc = cache ? *cache : local;
  auto target = tc.get(build_cyclic(p, n));
  std::uint64_t q1 = nt::ipow(p, n - 1);
  r.expect("a(C_p^n) for Galois C_p^n",
           hgs_count(regular_representation(build_cyclic(p, n)), *target).count, q1);
  for (auto d : nt::divisors(p - 1)) {
    if (d == 1) continue;
    auto g = build_cpn_semidirect(p, n, d);
    r.expect("a(C_p^n) for " + g.name(), hgs_count(g, *target).count, 1);
  }
  return r;
}

/// Cyclic-type counts for C_{p^3} ⋊ C_D over every D | p^2(p-1).
inline CheckReport verify_prop_p3(unsigned p, TargetCache* cache = nullptr) {
  CheckReport r{"prop-p3", detail::pstr(p), {}, {}, 0};
  detail::Timer timer(r);
  TargetCache local;
  TargetCache& tc = cache ? *cache : local;
  auto target = tc.get(build_cyclic(p, 3));
  for (auto d_order : nt::divisors(std::uint64_t{p} * p * (p - 1))) {
    unsigned a = 0;
    std::uint64_t d = d_order;
    while (d % p == 0) {
      d /= p;
      ++a;
    }
    std::uint64_t expected = d > 1 ? 1 : nt::ipow(p, a == 0 ? 2 : 3 - a);
    auto g = build_cpn_semidirect(p, 3, d_order);
    r.expect("a(C_p^3) for " + g.name() + " (a=" + std::to_string(a) + ", d=" + std::to_string(d) +
                 ")",
             hgs_count(g, *target).count, expected);
  }
  return r;
}

namespace detail {

/// The points of F_p^3 labelled x*p^2 + y*p + z; a map given coordinatewise.
inline Permutation affine_map(unsigned p, const std::function<std::array<unsigned, 3>(unsigned, unsigned, unsigned)>& f) {
  unsigned q = p * p * p;
  std::vector<point_t> v(q);
  for (unsigned s = 0; s < q; ++s) {
    auto [x, y, z] = f(s / (p * p), s / p % p, s % p);
    v[s] = static_cast<point_t>((x % p) * p * p + (y % p) * p + (z % p));
  }
  return Permutation(std::move(v));
}

}  // namespace detail

/// Constructive parts of the nonabelian-type implications: λ(H_p) and Aut(H_p) transported
/// to F_p^3 lie in Hol(C_p^3); <M, N> ≅ G_p is regular in Sym(C_{p^2} x C_p) and its
/// normalizer lies in Hol(C_{p^2} x C_p). Rows, when given, are audited for the resulting
/// implications.
inline CheckReport verify_thm_nonab(unsigned p, const std::vector<HgsRow>* rows = nullptr) {
  CheckReport r{"thm-nonab", detail::pstr(p), {}, {}, 0};
  detail::Timer timer(r);
  unsigned q = p * p * p;
  std::uint64_t half = nt::mod_inverse(2, p);

  // part 1: H_p relabelled on F_p^3 through (a,b,c) -> (a, b - ac/2, c)
  auto heis = build_heisenberg(p);
  auto elem = build_elementary(p);
  auto to_vec = [&](label_t m) {
    unsigned a = m / (p * p), b = m / p % p, c = m % p;
    unsigned bb = static_cast<unsigned>((b + p * p - (a * c % p) * half % p) % p);
    return static_cast<point_t>(a * p * p + bb * p + c);
  };
  std::vector<point_t> bmap(q), binv(q);
  for (unsigned m = 0; m < q; ++m) {
    bmap[m] = to_vec(static_cast<label_t>(m));
    binv[bmap[m]] = static_cast<point_t>(m);
  }
  auto transport = [&](const Permutation& sigma) {
    std::vector<point_t> v(q);
    for (unsigned s = 0; s < q; ++s) v[s] = bmap[sigma(binv[s])];
    return Permutation(std::move(v));
  };
  auto A = static_cast<label_t>(p * p), B = static_cast<label_t>(p), C = static_cast<label_t>(1);
  auto lam_a = transport(heis.left_translation(A));
  auto lam_b = transport(heis.left_translation(B));
  auto lam_c = transport(heis.left_translation(C));
  auto h = static_cast<unsigned>(half);
  auto formula_a = detail::affine_map(p, [&](unsigned a, unsigned b, unsigned c) {
    return std::array<unsigned, 3>{a + 1, b + c * h, c};
  });
  auto formula_b = detail::affine_map(p, [&](unsigned a, unsigned b, unsigned c) {
    return std::array<unsigned, 3>{a, b + 1, c};
  });
  auto formula_c = detail::affine_map(p, [&](unsigned a, unsigned b, unsigned c) {
    return std::array<unsigned, 3>{a, b + (p - 1) * a * h, c + 1};
  });
  r.expect_true("lambda_H(A) matches (a+1, b+c/2, c)", lam_a == formula_a, "formula");
  r.expect_true("lambda_H(B) matches (a, b+1, c)", lam_b == formula_b, "formula");
  r.expect_true("lambda_H(C) matches (a, b-a/2, c+1)", lam_c == formula_c, "formula");
  r.expect_true("lambda_H(B) is translation by (0,1,0)",
                lam_b == elem.left_translation(static_cast<label_t>(p)), "formula");
  r.expect_true("AC = BCA in H_p", heis.mul(A, C) == heis.mul(B, heis.mul(C, A)), "formula");

  bool conj_ok = true;
  auto lam_a_inv = inverse(lam_a), lam_c_inv = inverse(lam_c);
  for (unsigned l = 0; l < p && conj_ok; ++l)
    for (unsigned m = 0; m < p && conj_ok; ++m)
      for (unsigned n = 0; n < p && conj_ok; ++n) {
        auto t = elem.left_translation(static_cast<label_t>(l * p * p + m * p + n));
        auto ta = elem.left_translation(
            static_cast<label_t>(l * p * p + (m + n * h) % p * p + n));
        auto tc = elem.left_translation(
            static_cast<label_t>(l * p * p + (m + (p - 1) * l * h) % p * p + n));
        conj_ok = compose(lam_a, compose(t, lam_a_inv)) == ta &&
                  compose(lam_c, compose(t, lam_c_inv)) == tc;
      }
  r.expect_true("conjugation of translations by lambda_H(A), lambda_H(C)", conj_ok, "formula");

  bool members = true;
  for (const auto& x : {lam_a, lam_b, lam_c}) members = members && holomorph_membership(x, elem);
  r.expect_true("lambda_H(A), lambda_H(B), lambda_H(C) lie in Hol(C_p^3)", members);
  auto aut_h = automorphism_group(heis);
  r.expect("|Aut(H_p)|", aut_h.order(), expected_aut_order(P3Type::heis, p));
  bool aut_members = true;
  for (const auto& alpha : aut_h.generators())
    aut_members = aut_members && holomorph_membership(transport(alpha), elem);
  r.expect_true("transported generators of Aut(H_p) lie in Hol(C_p^3)", aut_members);

  // part 2: M = (a, phi2), N = (b, phi1^-1) in Hol(C_{p^2} x C_p)
  auto mixed = build_mixed(p);
  auto aut = mixed_automorphisms(p);
  auto a = static_cast<label_t>(p);
  label_t b = 1;
  auto M = compose(mixed.left_translation(a), aut.phi2);
  auto N = compose(mixed.left_translation(b), inverse(aut.phi1));
  r.expect("order of M", element_order(M), std::uint64_t{p} * p);
  r.expect("order of N", element_order(N), p);
  std::int64_t pp = static_cast<std::int64_t>(p);
  r.expect_true("NM = M^(1-2p) N", compose(N, M) == compose(power(M, 1 - 2 * pp), N), "formula");
  r.notes.push_back("the relation is read with N (calligraphic) as the right factor");
  PermGroup gp({M, N});
  r.expect("|<M, N>|", gp.order(), q);
  r.expect_true("<M, N> classifies as G_p", classify_p3_type(gp) == P3Type::exp2);
  r.expect_true("<M, N> is regular", is_regular(gp));
  std::uint64_t sends = 0;
  for (unsigned i = 0; i < p * p; ++i)
    for (unsigned j = 0; j < p; ++j) {
      auto w = compose(power(M, static_cast<std::int64_t>((1 + p * p - p) * i)), power(N, j));
      if (w(0) == mixed.mul(mixed.pow(a, i), mixed.pow(b, j))) ++sends;
    }
  r.notes.push_back("M^((1-p)i) N^j sends 1 to a^i b^j for " + std::to_string(sends) + " of " +
                    std::to_string(q) + " pairs (i, j); transitivity is asserted through regularity");

  // relations of phi1, phi2, phi3, psi1 with M and N
  auto conj = [](const Permutation& x, const Permutation& y) {
    return compose(x, compose(y, inverse(x)));
  };
  auto Mp = [&](std::int64_t k) { return power(M, k); };
  bool rel = conj(aut.phi1, M) == Mp(pp + 1) && conj(aut.phi1, N) == N &&
             conj(aut.phi2, M) == M && conj(aut.phi2, N) == compose(Mp(pp), N) &&
             conj(aut.phi3, M) == compose(N, Mp(pp + 1)) && conj(aut.phi3, N) == N &&
             conj(aut.psi1, M) == Mp(static_cast<std::int64_t>(aut.i)) && conj(aut.psi1, N) == N;
  r.expect_true("conjugation relations of phi1, phi2, phi3, psi1 on M, N", rel, "formula");

  // Norm_Sym(<M,N>) = Hol(<M,N>) moved onto the points via r -> r(0)
  const auto& gp_el = gp.elements();
  auto labeled = labeled_from_perm_group(gp, "<M,N>");
  std::vector<point_t> pos(q);  // label -> point
  std::vector<label_t> lab(q);  // point -> label
  for (std::size_t id = 0; id < gp_el.size(); ++id) {
    pos[id] = gp_el[id][0];
    lab[gp_el[id][0]] = static_cast<label_t>(id);
  }
  auto to_points = [&](const Permutation& on_labels) {
    std::vector<point_t> v(q);
    for (unsigned x = 0; x < q; ++x) v[x] = pos[on_labels(lab[x])];
    return Permutation(std::move(v));
  };
  auto aut_gp = automorphism_group(labeled);
  r.expect("|Aut(<M,N>)|", aut_gp.order(), expected_aut_order(P3Type::exp2, p));
  std::vector<Permutation> norm_gens;
  for (label_t g : labeled.generators()) norm_gens.push_back(to_points(labeled.left_translation(g)));
  for (const auto& alpha : aut_gp.generators()) norm_gens.push_back(to_points(alpha));
  bool norm_ok = true;
  for (const auto& x : norm_gens) {
    norm_ok = norm_ok && normalizes(x, gp);
    norm_ok = norm_ok && holomorph_membership(x, mixed).has_value();
  }
  r.expect_true("Norm_Sym(<M,N>) normalizes lambda(C_p^2 x C_p)", norm_ok);

  if (rows) {
    bool implications = true;
    for (const auto& row : *rows) {
      if (row.error) continue;
      if (row.counts[2] > 0 && row.counts[3] == 0) implications = false;
      if (row.counts[4] > 0 && row.counts[1] == 0) implications = false;
      if (row.name == "H27") r.expect("row H27, type C3^3", row.counts[3], 51, "table");
      if (row.name == "G27") r.expect("row G27, type C9xC3", row.counts[1], 39, "table");
    }
    r.expect_true("H_p present implies C_p^3 present; G_p implies C_p^2 x C_p", implications);
  }
  return r;
}

/// P1 and P2 censuses; P1 is normal in Hol(C_{p^2} x C_p).
inline CheckReport verify_thm_abin(unsigned p) {
  CheckReport r{"thm-abin", detail::pstr(p), {}, {}, 0};
  detail::Timer timer(r);
  std::uint64_t q = p;
  auto p1 = build_P1(p);
  auto p2 = build_P2(p);
  r.expect("|P1|", p1.order(), nt::ipow(p, 6));
  r.expect("|P2|", p2.order(), nt::ipow(p, 6));
  auto c1 = order_census(p1);
  auto c2 = order_census(p2);
  std::uint64_t c1p = detail::count_orders(c1, q), c1p2 = detail::count_orders(c1, q * q);
  std::uint64_t c2p = detail::count_orders(c2, q);
  if (p > 3) {
    r.expect("elements of order p in P1", c1p, nt::ipow(p, 5) - 1);
    r.expect("elements of order p^2 in P1", c1p2, nt::ipow(p, 6) - nt::ipow(p, 5));
    r.expect("elements of order p in P2", c2p, nt::ipow(p, 6) - 1);
    r.expect_true("P1 and P2 not isomorphic (censuses differ)", c1 != c2);
  } else {
    r.notes.push_back("p = 3: censuses reported only; P1 has " + std::to_string(c1p) +
                      " elements of order 3 and " + std::to_string(c1p2) +
                      " of order 9, P2 has " + std::to_string(c2p) + " of order 3");
    r.expect("|P1| at p = 3", p1.order(), nt::ipow(p, 6));
  }
  auto mixed = build_mixed(p);
  auto aut = mixed_automorphisms(p);
  bool normal = normalizes(aut.psi1, p1) && normalizes(aut.psi2, p1);
  for (const auto& g : p1.generators()) normal = normal && normalizes(g, p1);
  r.expect_true("P1 normalized by psi1, psi2", normal);
  r.notes.push_back(
      "the exponent p(p-1)/a m_1 in the proof is read with denominator 2; only censuses are checked");
  return r;
}

/// Implication audits over computed rows and the p = 3 rows outside the p > 3 type sets.
inline CheckReport verify_corollaries(const std::vector<HgsRow>& rows) {
  CheckReport r{"corollaries", std::to_string(rows.size()) + " rows", {}, {}, 0};
  detail::Timer timer(r);
  std::uint64_t cyc_violations = 0, heis_violations = 0, exp2_violations = 0, computed = 0;
  // allowed type sets for p > 3 as bitmasks over the table columns
  const std::vector<unsigned> allowed{0b00001, 0b01000, 0b00010, 0b01100, 0b10010};
  for (const auto& row : rows) {
    if (row.error) continue;
    ++computed;
    unsigned mask = 0;
    for (std::size_t i = 0; i < 5; ++i)
      if (row.counts[i] > 0) mask |= 1u << i;
    if (row.counts[0] > 0 && mask != 1u) ++cyc_violations;
    if (row.counts[2] > 0 && row.counts[3] == 0) ++heis_violations;
    if (row.counts[4] > 0 && row.counts[1] == 0) ++exp2_violations;
    if (mask != 0 && std::find(allowed.begin(), allowed.end(), mask) == allowed.end())
      r.notes.push_back(row.name + " has a type set outside the p > 3 list (p = " +
                        std::to_string(row.p) + " only)");
  }
  r.expect("rows with cyclic type and another type", cyc_violations, 0, "structural");
  r.expect("rows with H_p but without C_p^3", heis_violations, 0, "structural");
  r.expect("rows with G_p but without C_p^2 x C_p", exp2_violations, 0, "structural");
  r.notes.push_back(std::to_string(computed) + " rows audited");
  return r;
}

/// Compares computed rows with the reference table; rows absent from it are listed.
inline CheckReport verify_table_27(const std::vector<HgsRow>& rows) {
  CheckReport r{"table-27", std::to_string(rows.size()) + " rows", {}, {}, 0};
  detail::Timer timer(r);
  for (const auto& row : rows) {
    auto ref = reference_row(row.name);
    if (row.error) {
      r.items.push_back({row.name, "error: " + *row.error, ref ? "reference row" : "n/a", "table",
                         false});
      continue;
    }
    if (!ref) {
      r.notes.push_back(row.name + " not in the reference table; computed total " +
                        std::to_string(row.total));
      continue;
    }
    bool same = row.counts == ref->counts && row.total == ref->total;
    auto fmt = [](const std::array<std::uint64_t, 5>& c, std::uint64_t t) {
      std::string s;
      for (auto v : c) s += std::to_string(v) + ",";
      return s + std::to_string(t);
    };
    r.items.push_back({row.name, fmt(row.counts, row.total), fmt(ref->counts, ref->total), "table",
                       same});
  }
  return r;
}

/// Rows 1-5 from the regular representations of the five groups of order p^3.
inline std::vector<PointedGroup> regular_p3_groups(unsigned p) {
  std::vector<PointedGroup> out;
  for (auto t : kP3Types) {
    auto reg = regular_representation(build_p3(t, p));
    out.emplace_back(reg.group(), 0, type_name(t, p));
  }
  return out;
}

}  // namespace hgs
