#include "vassiliev/families.hpp"

#include <sstream>
#include <stdexcept>

namespace vassiliev {

namespace {

Diagram bare(int n = 1) {
  Diagram d;
  d.circles.assign(n, {});
  return d;
}

}  // namespace

Diagram omega(int k) {
  if (k < 1) throw std::invalid_argument("omega: k >= 1 required");
  std::vector<int> legs(k);
  for (int i = 0; i < k; ++i) legs[i] = i;
  // vertex i ports: spoke s_i, to-next a_i, to-prev b_i
  std::vector<std::array<int, 3>> verts;
  std::map<int, int> half;
  for (int i = 0; i < k; ++i) {
    int s = k + i, a = 2 * k + i, b = 3 * k + i;
    verts.push_back({s, a, b});
    half[legs[i]] = s;
    half[a] = 3 * k + (i + 1) % k;
  }
  return Diagram({legs}, verts, half);
}

Diagram family_L(int k) {
  if (k < 0) throw std::invalid_argument("L: k >= 0 required");
  if (k == 0) return bare();
  std::vector<std::vector<int>> circles;
  std::map<int, int> half;
  int nid = 0, prev_right = -1;
  for (int i = 0; i <= k; ++i) {
    std::vector<int> legs;
    if (i > 0) legs.push_back(nid++);
    if (i < k) legs.push_back(nid++);
    if (i > 0) half[prev_right] = legs.front();
    if (i < k) prev_right = legs.back();
    circles.push_back(std::move(legs));
  }
  return Diagram(std::move(circles), {}, std::move(half));
}

Diagram family_C(int k) {
  if (k < 0) throw std::invalid_argument("C: k >= 0 required");
  if (k == 0) return bare();
  if (k == 1) return family_L(1);
  std::vector<std::vector<int>> circles;
  std::map<int, int> half;
  for (int i = 0; i < k; ++i) {
    int l = 2 * i, r = 2 * i + 1;
    circles.push_back({l, r});
    half[r] = 2 * ((i + 1) % k);
  }
  return Diagram(std::move(circles), {}, std::move(half));
}

Diagram family_T(int k) {
  if (k < 0) throw std::invalid_argument("T: k >= 0 required");
  if (k == 0) return bare();
  std::vector<int> top(k), bot(k);
  std::map<int, int> half;
  for (int i = 0; i < k; ++i) {
    top[i] = i;
    bot[i] = k + i;
    half[top[i]] = k + (k - 1 - i);
  }
  return Diagram({top, bot}, {}, std::move(half));
}

Diagram psi() {
  // one circle with 4 legs; two rails of 4 vertices each, joined by 4 rungs
  std::vector<int> legs{1, 2, 3, 4};
  std::vector<std::array<int, 3>> verts;
  std::map<int, int> half;
  auto link = [&half](int a, int b) { half[a] = b; };
  int n = 10;
  std::array<std::array<int, 3>, 4> A, B;  // (in, rung, out)
  auto fresh3 = [&n] {
    int a = ++n;
    int b = ++n;
    int c = ++n;
    return std::array<int, 3>{a, b, c};
  };
  for (int i = 0; i < 4; ++i) A[i] = fresh3();
  for (int i = 0; i < 4; ++i) B[i] = fresh3();
  for (int i = 0; i < 4; ++i) {
    verts.push_back(A[i]);
    verts.push_back(B[i]);
    link(A[i][1], B[i][1]);
  }
  link(1, A[0][0]);
  for (int i = 0; i < 3; ++i) link(A[i][2], A[i + 1][0]);
  link(A[3][2], 2);
  link(4, B[0][0]);
  for (int i = 0; i < 3; ++i) link(B[i][2], B[i + 1][0]);
  link(B[3][2], 3);
  return Diagram({legs}, verts, half);
}

Diagram omega3_link() {
  // circle 1 legs ccw: connector, self, connector, self
  return Diagram({{1, 2, 3, 4}, {5, 6}}, {}, {{1, 5}, {3, 6}, {2, 4}});
}

Diagram theta() { return Diagram({{1, 2}}, {}, {{1, 2}}); }

Diagram t_power(Diagram d, int times) {
  for (int i = 0; i < times; ++i) d = insert_template(d, 0, Template::t);
  return d;
}

Diagram D_ijk(int i, int j, int k) {
  Diagram a = family_L(i);
  Diagram ab = connected_sum(a, a.circle_count() - 1, family_C(j), 0);
  return connected_sum(ab, 0, family_T(k), 0);
}

Diagram D_ijk_l(int i, int j, int k, int l) {
  Diagram d = D_ijk(i, j, k);
  int extra = l - d.circle_count();
  if (extra < 0)
    throw std::invalid_argument("D_ijk_l: l below the structural circle count");
  return disjoint_union(d, extra);
}

DiagramCombo E_nl(int n, int l) {
  if (n < 2) throw std::invalid_argument("E_nl: n >= 2 required");
  Diagram d1 = D_ijk_l(0, 0, n, l);
  Diagram base = D_ijk(0, 0, n - 2);
  Diagram d2 = disjoint_union(connected_sum(base, 0, omega(2), 0),
                              l - base.circle_count());
  DiagramCombo combo;
  combo.add(Rational(1), std::move(d1));
  combo.add(Rational(-1), std::move(d2));
  return combo;
}

std::vector<Diagram> Sigma(int n) {
  if (n < 4) throw std::invalid_argument("Sigma: n >= 4 required");
  if (n == 4) return {omega(4), t_power(omega(2), 2)};
  if (n == 7)
    return {omega(7),
            t_power(omega(6), 1),
            t_power(omega(5), 2),
            t_power(omega(4), 3),
            t_power(omega(2), 5),
            insert_template(omega(4), 0, Template::x3)};
  std::vector<Diagram> out;
  for (const Diagram& d : Sigma(n - 1)) out.push_back(t_power(d, 1));
  out.push_back(omega(n));
  if (n == 6) out.push_back(psi());
  if (n > 7 && n % 2 == 0)
    out.push_back(insert_template(omega(n - 3), 0, Template::x3));
  return out;
}

int M_card(int n, int l) { return n + l - 3 + (n + l - 1) / 2; }

std::vector<MElement> M_list(int n, int l) {
  if (n < 4 || l < 2 || n < l)
    throw std::invalid_argument("M_list: requires n >= 4, l >= 2, n >= l");
  std::vector<MElement> out;
  auto single = [](Diagram d) {
    DiagramCombo c;
    c.add(Rational(1), std::move(d));
    return c;
  };
  std::vector<Diagram> sigma = Sigma(n);
  for (size_t i = 0; i < sigma.size(); ++i)
    out.push_back({"Sigma:" + std::to_string(n) + "[" + std::to_string(i) + "]",
                   single(disjoint_union(sigma[i], l - 1))});
  // product element separating the w functional
  Diagram prod = connected_sum(omega(2), 0, t_power(omega(2), n - 4), 0);
  out.push_back({"w2#t^" + std::to_string(n - 4) + "w2",
                 single(disjoint_union(prod, l - 1))});
  // gl chain: D^l_{i,0,0}#omega_m with descending i
  int k = (n + l - 1) / 2;
  int i = 2 * k - n, m = 2 * n - 2 * k;
  while (i >= n - 2 * ((n - 1) / 2) && i >= 0 && m >= 2) {
    Diagram base = D_ijk(i, 0, 0);
    Diagram d = connected_sum(base, 0, omega(m), 0);
    d = disjoint_union(d, l - base.circle_count());
    out.push_back({"D:" + std::to_string(i) + ",0,0#omega:" + std::to_string(m),
                   single(std::move(d))});
    i -= 2;
    m += 2;
  }
  // so chain
  for (int j = 0; j <= l - 3; ++j)
    out.push_back({"D:" + std::to_string(j) + "," + std::to_string(l - 1 - j) +
                       "," + std::to_string(n - l + 1),
                   single(D_ijk_l(j, l - 1 - j, n - l + 1, l))});
  out.push_back({"D:0,0," + std::to_string(n), single(D_ijk_l(0, 0, n, l))});
  out.push_back({"E:" + std::to_string(n) + "," + std::to_string(l), E_nl(n, l)});
  return out;
}

namespace {

Poly binom_poly(int n, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return Poly(r);
}

}  // namespace

Poly closed_form(Family fam, WeightFlavor flavor, int k) {
  const Poly c = Poly::c();
  const Poly one{Rational(1)};
  switch (fam) {
    case Family::omega: {
      if (k < 2) throw std::invalid_argument("closed_form(omega): k >= 2");
      if (flavor == WeightFlavor::gl) {
        Poly ck1 = Poly::monomial(k + 1);
        return k % 2 == 0 ? ck1 + Poly::monomial(3) - Poly::monomial(1, Rational(2))
                          : ck1 - Poly::monomial(2);
      }
      return c * (c - one) * (c - Poly(Rational(2))) * seq_R(k);
    }
    case Family::L: {
      if (k < 0) throw std::invalid_argument("closed_form(L): k >= 0");
      if (flavor == WeightFlavor::gl) return c * (one - c * c).pow(k);
      return Poly::monomial(k + 1) * (one - c).pow(k);
    }
    case Family::T: {
      if (k < 1) throw std::invalid_argument("closed_form(T): k >= 1");
      if (flavor == WeightFlavor::gl) return (-c).pow(k) * (c * c - one);
      Poly sum;
      for (int i = 0; i <= k; i += 2) sum += binom_poly(k, i) * (one - c).pow(k - i);
      return c * (c - one) * (sum - (-c).pow(k - 1));
    }
    case Family::C: {
      if (flavor == WeightFlavor::gl)
        throw std::invalid_argument("closed_form(C): no gl closed form");
      if (k < 2) throw std::invalid_argument("closed_form(C): k >= 2");
      Rational two_pow(1);
      for (int i = 1; i < k; ++i) two_pow *= 2;
      return c * (c - one) *
             (Poly(two_pow) - Poly::monomial(k - 1) * (one - c).pow(k - 1));
    }
  }
  throw std::invalid_argument("closed_form: unknown family");
}

Rational seq_a(int k) {
  if (k < 2) throw std::invalid_argument("seq_a: k >= 2");
  Rational a(2);
  for (int i = 2; i < k; ++i) a = Rational(2) * a - Rational(4) * (i % 2 ? -1 : 1);
  return a;
}

Poly seq_R(int k) {
  if (k < 2) throw std::invalid_argument("seq_R: k >= 2");
  Poly R{seq_a(k)};
  Poly cm2 = Poly::c() - Poly(Rational(2));
  Poly term{Rational(1)};
  for (int i = 1; i <= k - 2; ++i) {
    term = term * cm2;
    R += term * Rational((k - i) % 2 ? -1 : 1);
  }
  return R;
}

Poly seq_Q(int k) {
  Poly divisor = Poly::c() * (Poly::c() - Poly(Rational(1)));
  return closed_form(Family::T, WeightFlavor::so, k).div_exact(divisor);
}

Poly seq_P(int k) {
  Rational two_pow(1);
  for (int i = 1; i < k; ++i) two_pow *= 2;
  return Poly(two_pow) -
         Poly::monomial(k - 1) * (Poly(Rational(1)) - Poly::c()).pow(k - 1);
}

std::pair<Rational, Rational> seq_de(int k) {
  if (k < 1) throw std::invalid_argument("seq_de: k >= 1");
  Rational d(0), e(1);
  for (int i = 1; i < k; ++i) {
    Rational nd = d + e, ne = Rational(2) * d;
    d = nd;
    e = ne;
  }
  return {d, e};
}

namespace {

[[noreturn]] void bad_spec(const std::string& spec, const std::string& why) {
  throw std::invalid_argument("bad family spec '" + spec + "': " + why);
}

std::vector<int> parse_ints(const std::string& spec, const std::string& args,
                            size_t expect) {
  std::vector<int> out;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      bad_spec(spec, "expected integer parameters");
    }
  if (out.size() != expect) bad_spec(spec, "wrong parameter count");
  return out;
}

}  // namespace

Diagram build_diagram_spec(const std::string& spec) {
  std::string head = spec, args;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    head = spec.substr(0, colon);
    args = spec.substr(colon + 1);
  }
  // t^m:inner and x3:inner wrap another spec
  if (head == "t" || head.rfind("t^", 0) == 0) {
    int times = head == "t" ? 1 : std::stoi(head.substr(2));
    Diagram inner = build_diagram_spec(args);
    if (inner.vertex_count() == 0) bad_spec(spec, "t needs an internal vertex");
    return t_power(inner, times);
  }
  if (head == "x3") {
    Diagram inner = build_diagram_spec(args);
    if (inner.vertex_count() == 0) bad_spec(spec, "x3 needs an internal vertex");
    return insert_template(inner, 0, Template::x3);
  }
  if (head == "psi") return psi();
  if (head == "Omega3") return omega3_link();
  if (head == "theta") return theta();
  if (head == "omega") return omega(parse_ints(spec, args, 1)[0]);
  if (head == "L") return family_L(parse_ints(spec, args, 1)[0]);
  if (head == "C") return family_C(parse_ints(spec, args, 1)[0]);
  if (head == "T") return family_T(parse_ints(spec, args, 1)[0]);
  if (head == "D") {
    auto at = args.find('@');
    std::string ijk = at == std::string::npos ? args : args.substr(0, at);
    auto v = parse_ints(spec, ijk, 3);
    if (at == std::string::npos) return D_ijk(v[0], v[1], v[2]);
    return D_ijk_l(v[0], v[1], v[2], std::stoi(args.substr(at + 1)));
  }
  bad_spec(spec, "unknown family");
}

DiagramCombo build_combo_spec(const std::string& spec) {
  if (spec.rfind("E:", 0) == 0) {
    auto v = parse_ints(spec, spec.substr(2), 2);
    return E_nl(v[0], v[1]);
  }
  DiagramCombo c;
  c.add(Rational(1), build_diagram_spec(spec));
  return c;
}

std::vector<std::pair<std::string, DiagramCombo>> build_list_spec(
    const std::string& spec) {
  std::vector<std::pair<std::string, DiagramCombo>> out;
  if (spec.rfind("Sigma:", 0) == 0) {
    int n = parse_ints(spec, spec.substr(6), 1)[0];
    std::vector<Diagram> sigma = Sigma(n);
    for (size_t i = 0; i < sigma.size(); ++i) {
      DiagramCombo c;
      c.add(Rational(1), sigma[i]);
      out.emplace_back(spec + "[" + std::to_string(i) + "]", std::move(c));
    }
    return out;
  }
  if (spec.rfind("M:", 0) == 0) {
    auto v = parse_ints(spec, spec.substr(2), 2);
    for (auto& el : M_list(v[0], v[1]))
      out.emplace_back(std::move(el.label), std::move(el.combo));
    return out;
  }
  out.emplace_back(spec, build_combo_spec(spec));
  return out;
}

}  // namespace vassiliev
