#include "hexforms/catalog.hpp"

#include <algorithm>

namespace hexforms {

namespace {

CatalogEntry alg(const std::string& id, const std::string& display, const std::string& tuple,
                 std::vector<std::string> tags) {
  CatalogEntry e;
  e.id = id;
  e.display_name = display;
  e.algebra = LieAlgebra::parse(display, tuple, make_ring({}));
  e.algebra.tags = std::move(tags);
  return e;
}

CatalogEntry fam(const std::string& id, const std::string& display, const RingPtr& ring,
                 const std::string& tuple, std::vector<std::string> tags,
                 const std::vector<std::string>& predicates,
                 const std::vector<std::string>& notes = {}) {
  CatalogEntry e;
  e.id = id;
  e.display_name = display;
  e.is_family = true;
  e.params = ring->names();
  e.algebra = LieAlgebra::parse(display, tuple, ring);
  e.algebra.tags = std::move(tags);
  for (const auto& p : predicates) e.algebra.assumptions.push_back(Assumption::predicate(ring, p));
  for (const auto& n : notes) e.algebra.assumptions.push_back(Assumption::note(n));
  return e;
}

std::vector<CatalogEntry> build_algebras() {
  std::vector<CatalogEntry> v;
  // Nilpotent algebras admitting a complex structure with closed (3,0)-form.
  const char* nil = "nilpotent";
  auto base = [](std::initializer_list<const char*> more) {
    std::vector<std::string> t = {"unimodular", "closed30"};
    for (auto* m : more) t.emplace_back(m);
    return t;
  };
  v.push_back(alg("h1", "h1", "(0,0,0,0,0,0)", base({nil, "balanced", "abelian", "kahler"})));
  v.push_back(alg("h2", "h2", "(0,0,0,0,e12,e34)", base({nil, "balanced"})));
  v.push_back(alg("h3", "h3", "(0,0,0,0,0,e12+e34)", base({nil, "balanced"})));
  v.push_back(alg("h4", "h4", "(0,0,0,0,e12,e14+e23)", base({nil, "balanced"})));
  v.push_back(alg("h5", "h5", "(0,0,0,0,e13-e24,e14+e23)", base({nil, "balanced"})));
  v.push_back(alg("h6", "h6", "(0,0,0,0,e12,e13)", base({nil, "balanced"})));
  v.push_back(alg("h7", "h7", "(0,0,0,e12,e13,e23)", base({nil})));
  v.push_back(alg("h8", "h8", "(0,0,0,0,0,e12)", base({nil})));
  v.push_back(alg("h9", "h9", "(0,0,0,0,e12,e14+e25)", base({nil})));
  v.push_back(alg("h10", "h10", "(0,0,0,e12,e13,e14)", base({nil})));
  v.push_back(alg("h11", "h11", "(0,0,0,e12,e13,e14+e23)", base({nil})));
  v.push_back(alg("h12", "h12", "(0,0,0,e12,e13,e24)", base({nil})));
  v.push_back(alg("h13", "h13", "(0,0,0,e12,e13+e14,e24)", base({nil})));
  v.push_back(alg("h14", "h14", "(0,0,0,e12,e14,e13-e24)", base({nil})));
  v.push_back(alg("h15", "h15", "(0,0,0,e12,e13-e24,e14+e23)", base({nil})));
  v.push_back(alg("h16", "h16", "(0,0,0,e12,e14,e24)", base({nil})));
  v.push_back(alg("h19-", "h19-", "(0,0,0,e12,e23,e14-e35)", base({nil, "balanced"})));
  v.push_back(alg("h26+", "h26+", "(0,0,e12,e13,e23,e14+e25)", base({nil})));

  // Solvable ones (g2^alpha with a symbolic alpha > 0 sits in the family list).
  const char* sol = "solvable";
  v.push_back(alg("g1", "g1", "(e15,-e25,-e35,e45,0,0)", base({sol, "balanced"})));
  v.push_back(alg("g2-0", "g2^0", "(e25,-e15,e45,-e35,0,0)", base({sol, "balanced", "kahler"})));
  v.push_back(alg("g3", "g3", "(0,-e13,e12,0,-e46,-e45)", base({sol, "balanced"})));
  v.push_back(alg("g4", "g4", "(e23,-e36,e26,-e56,e46,0)", base({sol})));
  v.push_back(alg("g5", "g5", "(e24+e35,e26,e36,-e46,-e56,0)", base({sol, "balanced"})));
  v.push_back(alg("g6", "g6", "(e24+e35,-e36,e26,-e56,e46,0)", base({sol})));
  v.push_back(alg("g7", "g7", "(e24+e35,e46,e56,-e26,-e36,0)", base({sol, "balanced"})));
  v.push_back(alg("g8", "g8", "(e16-e25,e15+e26,-e36+e45,-e35-e46,0,0)", base({sol, "balanced"})));
  v.push_back(alg("g9", "g9", "(e45,e15+e36,e14-e26+e56,-e56,e46,0)", base({sol})));
  {
    auto ring = make_ring({"al"});
    v.push_back(fam("g2-alpha", "g2^alpha", ring,
                    "(al*e15+e25,-e15+al*e25,-al*e35+e45,-e35-al*e45,0,0)",
                    {"unimodular", "closed30", "solvable", "balanced"}, {"al > 0"}));
    v.back().is_family = false;  // classification entry with one parameter
  }

  v.push_back(alg("so31", "so(3,1)", "(e23-e56,-e13+e46,e12-e45,e26-e35,-e16+e34,e15-e24)",
                  base({"semisimple", "balanced"})));

  // Unimodular non-solvable algebras without closed (3,0)-form: the 3+3 and
  // 5+1 decomposable list and the indecomposable L-series.
  auto noc = [](std::initializer_list<const char*> more) {
    std::vector<std::string> t = {"unimodular", "non-solvable"};
    for (auto* m : more) t.emplace_back(m);
    return t;
  };
  v.push_back(alg("sl2r+r3", "sl(2,R)+R3", "(e23,-e13,-e12,0,0,0)", noc({"decomposable"})));
  v.push_back(alg("sl2r+h3", "sl(2,R)+h3", "(e23,-e13,-e12,0,0,e45)", noc({"decomposable"})));
  v.push_back(alg("sl2r+e11", "sl(2,R)+e(1,1)", "(e23,-e13,-e12,0,-e46,-e45)", noc({"decomposable"})));
  v.push_back(alg("sl2r+e2", "sl(2,R)+e(2)", "(e23,-e13,-e12,0,-e46,e45)", noc({"decomposable"})));
  v.push_back(alg("sl2r+sl2r", "sl(2,R)+sl(2,R)", "(e23,-e13,-e12,e56,-e46,-e45)", noc({"decomposable"})));
  v.push_back(alg("sl2r+so3", "sl(2,R)+so(3)", "(e23,-e13,-e12,e56,-e46,e45)", noc({"decomposable"})));
  v.push_back(alg("so3+r3", "so(3)+R3", "(e23,-e13,e12,0,0,0)", noc({"decomposable"})));
  v.push_back(alg("so3+h3", "so(3)+h3", "(e23,-e13,e12,0,0,e45)", noc({"decomposable"})));
  v.push_back(alg("so3+e11", "so(3)+e(1,1)", "(e23,-e13,e12,0,-e46,-e45)", noc({"decomposable"})));
  v.push_back(alg("so3+e2", "so(3)+e(2)", "(e23,-e13,e12,0,-e46,e45)", noc({"decomposable"})));
  v.push_back(alg("so3+so3", "so(3)+so(3)", "(e23,-e13,e12,e56,-e46,e45)", noc({"decomposable"})));
  v.push_back(alg("a540+r", "A(5,40)+R", "(2*e12,-e13,2*e23,e24+e35,e14-e25,0)",
                  noc({"decomposable"})));
  v.push_back(alg("l61", "L(6,1)", "(e23,-e13,e12,e26-e35,-e16+e34,e15-e24)", noc({})));
  v.push_back(alg("l62", "L(6,2)", "(e23,2*e12,-2*e13,e14+e25,-e15+e34,e45)", noc({})));
  v.push_back(alg("l64", "L(6,4)", "(e23,2*e12,-2*e13,2*e14+2*e25,e26+e34,-2*e16+2*e35)", noc({})));
  v.push_back(alg("l63", "L(6,3)",
                  "(e23,2*e12,-2*e13,e14+e25+e46,-e15+e34+e56,0)",
                  {"non-solvable", "non-unimodular", "closed30"}));
  return v;
}

std::vector<CatalogEntry> build_families() {
  std::vector<CatalogEntry> v;
  std::vector<std::string> adapted = {"family", "adapted", "unimodular"};

  {
    auto ring = make_ring({"t"});
    v.push_back(fam("h5", "h5 (complex parallelizable)", ring,
                    "(0,0,0,0,t*e13-t*e24,t*e14+t*e23)", adapted, {"t != 0"}));
  }
  {
    auto ring = make_ring({"s", "t"});
    v.push_back(fam("2step-r0", "2-step family (abelian J, b=1)", ring,
                    "(0,0,0,0,"
                    "t/s*e13+t/s*e24,"
                    "-2*t*e12+2*t*e34-t/s*e14+t/s*e23)",
                    adapted, {"s != 0", "t != 0"}));
  }
  {
    auto ring = make_ring({"b", "s", "t"});
    v.push_back(fam("2step-r1", "2-step family (non-abelian J)", ring,
                    "(0,0,0,0,"
                    "t/s*(1+b^2)*e13-t/s*(1-b^2)*e24,"
                    "-2*t*e12+2*t*e34+t/s*(1-b^2)*e14+t/s*(1+b^2)*e23)",
                    adapted, {"s != 0", "t != 0"}));
  }
  {
    // e5, e6 rows of the abelian-h5 frame; m = |u|, W = sqrt(s^2-|u|^2).
    auto mk = [&](const std::string& id, const std::string& disp, const std::string& rho0,
                  const std::string& bval, bool b_symbolic) {
      std::vector<std::string> names = {"s", "t", "u1", "u2", "m", "W"};
      if (b_symbolic) names.insert(names.begin(), "b");
      auto ring = make_ring(names, {{"m", "u1^2+u2^2"}, {"W", "s^2-m^2"}});
      std::string b = b_symbolic ? "b" : bval;
      std::string rr = rho0;
      std::string de5 =
          "4*" + b + "^2*s*u1*W/t*e12-4*" + b + "^2*s*u1*W/t*e34"
          "-4*" + b + "^2*s*u1*(s^2-m^2)/(t*m)*e13-4*" + b + "^2*s*u1*(s^2-m^2)/(t*m)*e24"
          "+4*" + rr + "*s^2*u1*W/(t*m)*e13-4*" + rr + "*s^2*u1*W/(t*m)*e24"
          "+4*s^2*u2*W*(" + rr + "-" + b + "^2)/(t*m)*e14+4*s^2*u2*W*(" + rr + "+" + b +
          "^2)/(t*m)*e23";
      std::string de6 =
          "4*s*W*(2*s^2-" + b + "^2*u2)/t*e12-4*s*W*(2*s^2-" + b + "^2*u2)/t*e34"
          "+4*" + b + "^2*s*u2*(s^2-m^2)/(t*m)*e13+4*" + b + "^2*s*u2*(s^2-m^2)/(t*m)*e24"
          "-4*" + rr + "*s^2*u2*W/(t*m)*e13+4*" + rr + "*s^2*u2*W/(t*m)*e24"
          "+4*s^2*u1*W*(" + rr + "-" + b + "^2)/(t*m)*e14+4*s^2*u1*W*(" + rr + "+" + b +
          "^2)/(t*m)*e23";
      v.push_back(fam(id, disp, ring, "(0,0,0,0," + de5 + "," + de6 + ")", adapted,
                      {"s != 0", "t != 0", "m > 0", "s^2 > m^2"},
                      {"W = sqrt(s^2-|u|^2) > 0", "m = |u| > 0"}));
    };
    mk("h5ab-01", "abelian-h5 frame (rho=0, b=1)", "0", "1", false);
    mk("h5ab-10", "abelian-h5 frame (rho=1, b=0)", "1", "0", false);
    mk("h5ab-1b", "abelian-h5 frame (rho=1, b free)", "1", "b", true);
  }
  for (const char* sign : {"+", "-"}) {
    std::string sgn = sign;
    std::string id = sgn == "+" ? "plus" : "minus";
    auto ring1 = make_ring({"r", "s"});
    v.push_back(fam("h19-i-" + id, "h19- family I (" + sgn + ")", ring1,
                    "(0,0,2*s/r*e15,2*s/r*e25,0," + sgn + "2/(r*s)*e13" + sgn + "2/(r*s)*e24)",
                    adapted, {"r != 0", "s != 0"}));
    auto ring2 = make_ring({"r", "s", "t", "Z"}, {{"Z", "s^2*t^2-1"}});
    // 1/(s t + Z) = s t - Z because Z^2 = s^2 t^2 - 1.
    std::string de3 = "s/(r*t*Z)*(" + sgn + "t^2/s^2*e13" + sgn + "t^2/s^2*e24" + sgn +
                      "t^2/s^2*(s*t+Z)*e25" + (sgn == "+" ? std::string("-") : std::string("+")) +
                      "t^2/s^2*(s*t+Z)*e16+e14+(s*t-Z)*e15)";
    std::string de4 = "s/(r*t*Z)*(e24+(s*t-Z)*e25)";
    std::string de5 = "-s/(r*t*Z)*((s*t+Z)*e24+e25)";
    std::string de6 = "s/(r*t*Z)*(" + sgn + "t^2/s^2*(s*t-Z)*e13" + sgn +
                      "t^2/s^2*(s*t-Z)*e24" + sgn + "t^2/s^2*e25" +
                      (sgn == "+" ? std::string("-") : std::string("+")) +
                      "t^2/s^2*e16+(s*t+Z)*e14+e15)";
    v.push_back(fam("h19-ii-" + id, "h19- family II (" + sgn + ")", ring2,
                    "(0,0," + de3 + "," + de4 + "," + de5 + "," + de6 + ")", adapted,
                    {"r != 0", "s != 0", "t != 0", "s^2*t^2 > 1"},
                    {"Z = sqrt(s^2*t^2-1) > 0"}));
  }
  {
    auto ring = make_ring({"t", "u1", "u2", "w"}, {{"w", "1-u1^2-u2^2"}});
    std::vector<std::string> pred = {"t != 0", "u1^2+u2^2 < 1"};
    std::vector<std::string> note = {"w = sqrt(1-|u|^2) > 0"};
    v.push_back(fam("solv-g1", "g1 balanced frame", ring,
                    "(2/t*e15,2/t*e25,"
                    "4*u1/(t*w)*e15-4*u2/(t*w)*e25-2/t*e35,"
                    "4*u2/(t*w)*e15+4*u1/(t*w)*e25-2/t*e45,0,0)",
                    adapted, pred, note));
    v.push_back(fam("solv-g2-0", "g2^0 balanced frame", ring,
                    "(-2/t*e25,2/t*e15,"
                    "-4*u2/(t*w)*e15-4*u1/(t*w)*e25+2/t*e45,"
                    "4*u1/(t*w)*e15-4*u2/(t*w)*e25-2/t*e35,0,0)",
                    adapted, pred, note));
  }
  for (const char* dv : {"1", "-1"}) {
    std::string d = dv;
    std::string id = d == "1" ? "plus" : "minus";
    auto ring = make_ring({"t", "u1", "u2", "w", "cth", "sth"},
                          {{"w", "1-u1^2-u2^2"}, {"sth", "1-cth^2"}});
    std::string c = "(" + d + ")*cth";
    v.push_back(fam(
        "solv-g2-alpha-" + id, "g2^alpha balanced frame (delta=" + d + ")", ring,
        "(2*" + c + "/t*e15-2*sth/t*e25,"
        "2*sth/t*e15+2*" + c + "/t*e25,"
        "(4*u1*" + c + "-4*u2*sth)/(t*w)*e15-(4*u2*" + c + "+4*u1*sth)/(t*w)*e25-2*" + c +
        "/t*e35+2*sth/t*e45,"
        "(4*u2*" + c + "+4*u1*sth)/(t*w)*e15+(4*u1*" + c + "-4*u2*sth)/(t*w)*e25-2*sth/t*e35-2*" +
        c + "/t*e45,0,0)",
        adapted, {"t != 0", "u1^2+u2^2 < 1", "cth > 0", "cth < 1", "sth > 0"},
        {"cth = cos(theta), sth = sin(theta), theta in (0, pi/2)",
         "w = sqrt(1-|u|^2) > 0"}));
  }
  {
    auto ring = make_ring({"x", "r", "s", "t", "v1", "v2", "D"}, {{"D", "s^2*t^2-v1^2-v2^2"}});
    v.push_back(fam(
        "solv-g3", "g3 balanced frame", ring,
        "(0,0,"
        "v2/(r*t^2)*e13+v1/(r*t^2)*e14-D/(r*t^2)*e16,"
        "2*x*v2/(r*t^2)*e13+2*x*v1/(r*t^2)*e14-2*x*D/(r*t^2)*e16"
        "+(v2-2*x*v1)/(r*t^2)*e23+(v1+2*x*v2)/(r*t^2)*e24+2*x*D/(r*t^2)*e25-D/(r*t^2)*e26,"
        "(t^4+2*x*v2*(v1-2*x*v2))/(2*x*r*t^2*D)*e13+v1*(v1-2*x*v2)/(r*t^2*D)*e14"
        "-(v1-2*x*v2)/(r*t^2)*e16-(t^4+v2^2-2*x*v1*v2)/(r*t^2*D)*e23"
        "+(t^4-2*x*v2*(v1+2*x*v2))/(2*x*r*t^2*D)*e24-2*x*v2/(r*t^2)*e25+v2/(r*t^2)*e26,"
        "(t^4+v2*(v2+2*x*v1))/(r*t^2*D)*e13+v1*(v2+2*x*v1)/(r*t^2*D)*e14"
        "-(v2+2*x*v1)/(r*t^2)*e16+v1*(v2-2*x*v1)/(r*t^2*D)*e23"
        "+v1*(v1+2*x*v2)/(r*t^2*D)*e24+2*x*v1/(r*t^2)*e25-v1/(r*t^2)*e26)",
        adapted, {"x > 0", "r != 0", "s != 0", "t != 0", "s^2*t^2 > v1^2+v2^2"},
        {"D = sqrt(s^2*t^2-|v|^2) > 0"}));
  }
  {
    auto ring = make_ring({"r", "s", "t", "u1", "D"}, {{"D", "r^2*s^2-u1^2"}});
    v.push_back(fam("solv-g5", "g5 balanced frame", ring,
                    "(2/t*e15,2/t*e25,"
                    "4*u1/(t*D)*e15-2/t*e35,"
                    "4*u1/(t*D)*e25-2/t*e45,"
                    "0,"
                    "2*t/D*e13+2*t/D*e24)",
                    adapted, {"r != 0", "s != 0", "t != 0", "r^2*s^2 > u1^2"},
                    {"D = sqrt(r^2*s^2-u1^2) > 0"}));
  }
  {
    auto ring = make_ring({"Y", "Z", "T"});
    v.push_back(fam("solv-g8-cp", "g8 complex parallelizable frame", ring,
                    "(-Y*e16-Y*e25,"
                    "Y*e15-Y*e26,"
                    "Z*e15-T*e16-T*e25-Z*e26+Y*e36+Y*e45,"
                    "T*e15+Z*e16+Z*e25-T*e26-Y*e35+Y*e46,0,0)",
                    adapted, {"Y > 0"}));
  }
  {
    auto ring = make_ring({"a", "b", "t", "u1", "u2", "w"}, {{"w", "1-u1^2-u2^2"}});
    v.push_back(fam("solv-g8-a", "g8 non-parallelizable frame", ring,
                    "(-2*a/t*e15-2/t*e16+2*b/t*e25,"
                    "-2*b/t*e15-2*a/t*e25-2/t*e26,"
                    "-4*(a*u1-b*u2)/(t*w)*e15-4*u1/(t*w)*e16+4*(b*u1+a*u2)/(t*w)*e25"
                    "+4*u2/(t*w)*e26+2*a/t*e35+2/t*e36-2*b/t*e45,"
                    "-4*(b*u1+a*u2)/(t*w)*e15-4*u2/(t*w)*e16-4*(a*u1-b*u2)/(t*w)*e25"
                    "-4*u1/(t*w)*e26+2*b/t*e35+2*a/t*e45+2/t*e46,0,0)",
                    adapted,
                    {"t != 0", "b != 0", "u1^2+u2^2 < 1", "a^2+(b+1)^2 != 0"},
                    {"w = sqrt(1-|u|^2) > 0"}));
  }
  {
    auto ring = make_ring({"t"});
    v.push_back(fam("nakamura", "Nakamura abelian frame (diagonal)", ring,
                    "(-2/t*e16+2/t*e25,"
                    "-2/t*e15-2/t*e26,"
                    "2/t*e36-2/t*e45,"
                    "2/t*e35+2/t*e46,0,0)",
                    adapted, {"t != 0"}));
    v.push_back(fam("so31-t", "so(3,1) diagonal frame", ring,
                    "(1/t*e35-1/t*e46,"
                    "1/t*e36+1/t*e45,"
                    "-1/t*e15+1/t*e26,"
                    "-1/t*e16-1/t*e25,"
                    "1/t*e13-1/t*e24,"
                    "1/t*e14+1/t*e23)",
                    adapted, {"t != 0"}));
  }
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& algebra_catalog() {
  static const std::vector<CatalogEntry> entries = build_algebras();
  return entries;
}

const std::vector<CatalogEntry>& family_catalog() {
  static const std::vector<CatalogEntry> entries = build_families();
  return entries;
}

const CatalogEntry& find_algebra(const std::string& id) {
  for (const auto& e : algebra_catalog())
    if (e.id == id) return e;
  fail(ErrorKind::UnknownId, "unknown algebra id: " + id);
}

const CatalogEntry& find_family(const std::string& id) {
  for (const auto& e : family_catalog())
    if (e.id == id) return e;
  fail(ErrorKind::UnknownId, "unknown family id: " + id);
}

bool has_family(const std::string& id) {
  for (const auto& e : family_catalog())
    if (e.id == id) return true;
  return false;
}

std::vector<const CatalogEntry*> algebras_with_tag(const std::string& tag) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : algebra_catalog())
    if (std::find(e.algebra.tags.begin(), e.algebra.tags.end(), tag) != e.algebra.tags.end())
      out.push_back(&e);
  return out;
}

}  // namespace hexforms
