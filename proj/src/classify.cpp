#include "bqa/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace bqa {

std::string to_string(Family f) {
  switch (f) {
    case Family::TwoGen: return "TwoGen";
    case Family::LieType: return "LieType";
    case Family::OneQ: return "OneQ";
    case Family::TwoQ: return "TwoQ";
    case Family::ThreeQ: return "ThreeQ";
  }
  return "?";
}

const FieldValue& CanonicalForm::param(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  throw std::out_of_range("no parameter " + name + " in " + tag());
}

namespace {

// Tracks the running presentation together with the transforms applied so far.
struct Pipeline {
  Bq3 cur;
  std::vector<Transform> trace;

  void step(const Transform& t) {
    if (t.is_identity()) return;
    cur = apply(cur, t);
    trace.push_back(t);
  }
  void step(const std::pair<Bq3, Transform>& r) {
    if (r.second.is_identity()) return;
    cur = r.first;
    trace.push_back(r.second);
  }
};

void require_zero(std::initializer_list<const FieldValue*> vs, const char* where) {
  for (auto* v : vs)
    if (!v->is_zero()) throw std::logic_error(std::string("normal form violated in ") + where);
}

Transform torus3(const Field& f, const FieldValue& s1, const FieldValue& s2, const FieldValue& s3) {
  (void)f;
  return Transform::torus({s1, s2, s3});
}

bool is_even(const Perm& s) {
  int inv = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inv;
  return inv % 2 == 0;
}

// First permutation (lexicographic) bringing the q's into the requested pattern of non-units.
Perm pattern_perm(const Bq3& A, std::array<bool, 3> want_nonunit) {
  BqPresentation p = A.to_presentation();
  Perm s = identity_perm(3);
  do {
    bool ok = true;
    const int pairs[3][2] = {{2, 1}, {3, 1}, {3, 2}};
    for (int t = 0; t < 3 && ok; ++t) {
      FieldValue q = p.q_completed(s[pairs[t][0] - 1], s[pairs[t][1] - 1]);
      ok = q.is_one() != want_nonunit[t];
    }
    if (ok) return s;
  } while (std::next_permutation(s.begin(), s.end()));
  throw std::logic_error("no permutation realizes the q-pattern");
}

// Rank of the three-q sub-case: quantum, then q1 = q3 alone, then no coincidence.
// Permutations move q1 q2 = 1 and q2 q3 = 1 onto q1 = q3, so those never survive.
int three_q_rank(const BqPresentation& p, const Perm& s) {
  FieldValue q1 = p.q_completed(s[1], s[0]), q2 = p.q_completed(s[2], s[0]), q3 = p.q_completed(s[2], s[1]);
  bool e1 = (q2 * q3).is_one(), e2 = q1 == q3, e3 = (q1 * q2).is_one();
  if (e1 && e2 && e3) return 0;
  if (e2) return 1;
  if (e1 || e3) return 2;
  return 3;
}

Perm three_q_perm(const Bq3& A) {
  BqPresentation p = A.to_presentation();
  Perm s = identity_perm(3), best = s;
  int best_rank = three_q_rank(p, s);
  while (std::next_permutation(s.begin(), s.end())) {
    int r = three_q_rank(p, s);
    if (r < best_rank) best_rank = r, best = s;
  }
  return best;
}

void verify(const Bq3& input, Classification3& out) {
  Transform g = compose_all(out.trace, input.field(), 3);
  if (!(apply(input, g) == out.canonical)) throw std::logic_error("transform trace does not reproduce the canonical form");
  if (!is_consistent3(out.canonical)) throw std::logic_error("canonical form is inconsistent");
}

Classification3 classify_one_q(Pipeline& pl) {
  const Field f = pl.cur.field();
  const FieldValue one = f.one();
  pl.step(kill_ab(pl.cur));
  const Bq3& A = pl.cur;
  require_zero({&A.a, &A.b, &A.nu, &A.gamma, &A.beta, &A.lambda, &A.b2, &A.b3}, "OneQ");
  CanonicalForm form;
  form.family = Family::OneQ;
  if (!(A.mu + A.alpha).is_zero()) {
    FieldValue s = !A.alpha.is_zero() ? A.alpha.inverse() : A.mu.inverse();
    pl.step(torus3(f, one, one, s));
    form.kind = "MuAlphaNonzero";
    form.params = {{"q1", pl.cur.q1}, {"alpha", pl.cur.alpha}, {"mu", pl.cur.mu}};
  } else {
    if (!A.c.is_zero()) {
      // b1 is absorbed by the translation x3 -> x3 + b1/c
      pl.step(Transform::translation({f.zero(), f.zero(), A.b1 / A.c}));
    }
    const Bq3& B = pl.cur;
    FieldValue s3 = B.alpha.is_zero() ? one : B.alpha.inverse();
    FieldValue s1 = one;
    if (!B.c.is_zero()) s1 = s3 / B.c;
    else if (!B.b1.is_zero()) s1 = B.b1.inverse();
    pl.step(torus3(f, s1, one, s3));
    form.kind = "MuAlphaZero";
    form.params = {{"q1", pl.cur.q1}, {"alpha", pl.cur.alpha}, {"c", pl.cur.c}, {"b1", pl.cur.b1}};
  }
  return {form, pl.cur, pl.trace};
}

Classification3 classify_two_q(Pipeline& pl) {
  const Field f = pl.cur.field();
  const FieldValue one = f.one();
  pl.step(kill_ab(pl.cur));
  pl.step(kill_alpha(pl.cur));
  const Bq3& A = pl.cur;
  require_zero({&A.a, &A.b, &A.alpha, &A.nu, &A.gamma, &A.beta, &A.mu, &A.c, &A.b1, &A.b2}, "TwoQ");
  CanonicalForm form;
  form.family = Family::TwoQ;
  if (!(A.q1 * A.q2).is_one()) {
    require_zero({&A.lambda, &A.b3}, "TwoQ");
    form.kind = "Q1Q2NonUnit";
    form.params = {{"q1", A.q1}, {"q2", A.q2}};
  } else {
    // lambda -> s2 s3 lambda / s1, b3 -> s2 s3 b3
    FieldValue s2 = A.b3.is_zero() ? one : A.b3.inverse();
    FieldValue s1 = A.lambda.is_zero() ? one : s2 * A.lambda;
    pl.step(torus3(f, s1, s2, one));
    form.kind = "Q1Q2Unit";
    form.params = {{"q1", pl.cur.q1}, {"lambda", pl.cur.lambda}, {"b3", pl.cur.b3}};
  }
  return {form, pl.cur, pl.trace};
}

Classification3 classify_quantum_reduced(Pipeline& pl);

Classification3 classify_three_q(Pipeline& pl) {
  const Field f = pl.cur.field();
  const FieldValue one = f.one();
  pl.step(kill_ab(pl.cur));
  pl.step(kill_alpha(pl.cur));
  const Bq3& A = pl.cur;
  require_zero({&A.a, &A.b, &A.alpha, &A.mu, &A.nu, &A.gamma}, "ThreeQ");
  bool e1 = (A.q2 * A.q3).is_one(), e2 = A.q1 == A.q3, e3 = (A.q1 * A.q2).is_one();
  if (e1 && e2 && e3) return classify_quantum_reduced(pl);

  CanonicalForm form;
  form.family = Family::ThreeQ;
  form.params = {{"q1", A.q1}, {"q2", A.q2}, {"q3", A.q3}};
  if (e2) {
    require_zero({&A.c, &A.lambda, &A.b1, &A.b3}, "ThreeQ.C2");
    // beta -> s1 s3 beta / s2, b2 -> s1 s3 b2
    FieldValue s1 = A.b2.is_zero() ? one : A.b2.inverse();
    FieldValue s2 = A.beta.is_zero() ? one : s1 * A.beta;
    pl.step(torus3(f, s1, s2, one));
    form.kind = "C2";
    form.params.emplace_back("beta", pl.cur.beta);
    form.params.emplace_back("b2", pl.cur.b2);
  } else if (e1 || e3) {
    throw std::logic_error("three-q permutation did not reach the C2 pattern");
  } else {
    require_zero({&A.c, &A.beta, &A.lambda, &A.b1, &A.b2, &A.b3}, "ThreeQ.C5");
    form.kind = "C5";
  }
  return {form, pl.cur, pl.trace};
}

std::array<int, 3> supp(const FieldValue& x, const FieldValue& y, const FieldValue& z) {
  return {x.is_zero() ? 0 : 1, y.is_zero() ? 0 : 1, z.is_zero() ? 0 : 1};
}

Triple case_triple(const Bq3& A, int caseno) {
  switch (caseno) {
    case 1: return {A.c, A.beta, A.lambda};
    case 2: return {A.c, A.beta, A.b3};
    case 3: return {A.c, A.b2, A.b3};
    default: return {A.b1, A.b2, A.b3};
  }
}

// Requires a = b = alpha = mu = nu = gamma = 0 and the quantum q-pattern.
Classification3 classify_quantum_reduced(Pipeline& pl) {
  const Field f = pl.cur.field();
  const Bq3 A = pl.cur;
  int zeros = (A.c.is_zero() ? 1 : 0) + (A.beta.is_zero() ? 1 : 0) + (A.lambda.is_zero() ? 1 : 0);
  int caseno = zeros + 1;

  std::vector<Perm> candidates;
  {
    Perm s = identity_perm(3);
    std::vector<Perm> odd;
    do {
      (is_even(s) ? candidates : odd).push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    candidates.insert(candidates.end(), odd.begin(), odd.end());
  }

  using S = std::array<int, 3>;
  auto acceptable = [&](const Bq3& B) {
    switch (caseno) {
      case 1: return true;
      case 2: return B.lambda.is_zero();
      case 3: {
        if (B.c.is_zero()) return false;
        S s = supp(B.c, B.b2, B.b3);
        return s == S{1, 1, 1} || s == S{1, 1, 0} || s == S{1, 0, 0};
      }
      default: {
        S s = supp(B.b1, B.b2, B.b3);
        return s == S{1, 1, 1} || s == S{1, 1, 0} || s == S{1, 0, 0} || s == S{0, 0, 0};
      }
    }
  };

  for (const auto& s : candidates) {
    Transform t = Transform::permutation(f, s);
    Bq3 B = apply(A, t);
    if (!acceptable(B)) continue;
    pl.step(t);
    OrbitNormalization norm = orbit_normalize(caseno, case_triple(pl.cur, caseno));
    pl.step(Transform::torus({norm.lambda[0].inverse(), norm.lambda[1].inverse(), norm.lambda[2].inverse()}));
    if (!(case_triple(pl.cur, caseno) == norm.representative)) throw std::logic_error("quantum normalization failed");

    CanonicalForm form;
    form.family = Family::ThreeQ;
    form.kind = "Quantum";
    form.caseno = caseno;
    form.q_inverted = !is_even(s);
    form.invariant = orbit_invariant(caseno, norm.representative);
    const Bq3& C = pl.cur;
    form.params = {{"q", C.q1}, {"c", C.c}, {"beta", C.beta}, {"lambda", C.lambda},
                   {"b1", C.b1}, {"b2", C.b2}, {"b3", C.b3}};
    return {form, pl.cur, pl.trace};
  }
  throw std::logic_error("no permutation reaches a quantum normal pattern");
}

}  // namespace

CanonicalForm lie_classify(const Bq3& A) {
  if (!A.q1.is_one() || !A.q2.is_one() || !A.q3.is_one()) throw std::domain_error("not of Lie type");
  if (!is_consistent3(A)) throw std::domain_error("presentation is not PBW-consistent");
  CanonicalForm form;
  form.family = Family::LieType;
  LieInvariants inv = lie_invariants(A);
  LieType t = lie_type(inv);
  form.kind = to_string(t);
  form.lie = inv;
  form.closure_flag = t == LieType::Usl2;
  return form;
}

bool is_quantum(const Bq3& A) {
  return !A.q1.is_one() && (A.q1 * A.q2).is_one() && A.q1 == A.q3;
}

Classification3 quantum_classify(const Bq3& A) {
  if (!is_quantum(A)) throw std::domain_error("not a quantum presentation");
  if (!is_consistent3(A)) throw std::domain_error("presentation is not PBW-consistent");
  Pipeline pl{A, {}};
  pl.step(kill_ab(pl.cur));
  pl.step(kill_alpha(pl.cur));
  Classification3 out = classify_quantum_reduced(pl);
  verify(A, out);
  return out;
}

Classification3 classify3(const Bq3& A) {
  if (!is_consistent3(A)) throw std::domain_error("presentation is not PBW-consistent");
  const Field f = A.field();
  int nonunits = (A.q1.is_one() ? 0 : 1) + (A.q2.is_one() ? 0 : 1) + (A.q3.is_one() ? 0 : 1);
  Classification3 out;
  if (nonunits == 0) {
    out = {lie_classify(A), A, {}};
  } else {
    std::array<bool, 3> pattern = nonunits == 1   ? std::array<bool, 3>{true, false, false}
                                  : nonunits == 2 ? std::array<bool, 3>{true, true, false}
                                                  : std::array<bool, 3>{true, true, true};
    Pipeline pl{A, {}};
    pl.step(Transform::permutation(f, nonunits == 3 ? three_q_perm(A) : pattern_perm(A, pattern)));
    if (nonunits == 1) out = classify_one_q(pl);
    else if (nonunits == 2) out = classify_two_q(pl);
    else out = classify_three_q(pl);
  }
  verify(A, out);
  return out;
}

Classification2 classify2(const FieldValue& q, const FieldValue& a, const FieldValue& b, const FieldValue& c) {
  const Field f = q.field();
  BqPresentation p(f, 2);
  p.set_q(2, 1, q);
  p.set_a(2, 1, 1, a);
  p.set_a(2, 1, 2, b);
  p.set_b(2, 1, c);
  return classify2(p);
}

Classification2 classify2(const BqPresentation& p) {
  if (p.n() != 2) throw std::invalid_argument("classify2 expects two generators");
  const Field f = p.field();
  const FieldValue one = f.one();
  Classification2 out{{}, p, {}};
  out.form.family = Family::TwoGen;
  auto step = [&](const Transform& t) {
    if (t.is_identity()) return;
    out.canonical = apply(out.canonical, t);
    out.trace.push_back(t);
  };
  FieldValue q = p.q(2, 1), a = p.a(2, 1, 1), b = p.a(2, 1, 2);
  if (q.is_one()) {
    if (!a.is_zero() || !b.is_zero()) {
      // the non-abelian two-dimensional Lie algebra; no monomial change reaches a fixed shape
      out.form.kind = "Un2";
    } else if (p.b(2, 1).is_zero()) {
      out.form.kind = "Poly2";
    } else {
      step(Transform::torus({p.b(2, 1).inverse(), one}));
      out.form.kind = "Weyl";
    }
  } else {
    FieldValue d = one - q;
    step(Transform::translation({-(b / d), -(a / d)}));
    FieldValue c = out.canonical.b(2, 1);
    if (c.is_zero()) {
      out.form.kind = "QuantumPlane";
    } else {
      step(Transform::torus({c.inverse(), one}));
      out.form.kind = "QuantumWeyl";
    }
    out.form.params = {{"q", q}};
  }
  if (!(apply(p, compose_all(out.trace, f, 2)) == out.canonical))
    throw std::logic_error("transform trace does not reproduce the canonical form");
  return out;
}

std::optional<std::pair<int, std::array<int, 3>>> quantum_reduced_type(const CanonicalForm& form) {
  if (form.family != Family::ThreeQ || form.kind != "Quantum" || !form.invariant) return std::nullopt;
  for (const auto& pc : form.invariant->classes)
    if (!pc.representative.is_one()) return std::nullopt;
  return std::make_pair(form.caseno, form.invariant->supp);
}

}  // namespace bqa
