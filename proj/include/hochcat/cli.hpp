#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "extensions.hpp"

namespace hochcat::cli {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// Algebra file format:
// {"field": {"kind": "Q"} | {"kind": "Fp", "p": 5}, "dim": d,
//  "unit": [scalar strings], "mul": d x d array of length-d arrays of
//  scalar strings with mul[i][j][k] the coefficient of b_k in b_i b_j,
//  "name": optional}
struct ParsedAlgebra {
  Field field;
  std::string name;
  int dim = 0;
  std::vector<std::string> unit;
  std::vector<std::vector<std::vector<std::string>>> mul;
};

namespace detail {

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline ParsedAlgebra parse_algebra(const std::string& text, const std::string& fallback_name = "algebra") {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_col(text, e.byte ? e.byte - 1 : 0);
    throw ParseError(line, col, e.what());
  }
  ParsedAlgebra out;
  try {
    const json& f = doc.at("field");
    std::string kind = f.at("kind").get<std::string>();
    if (kind == "Q") out.field = Field::rationals();
    else if (kind == "Fp") out.field = Field::prime(f.at("p").get<std::uint64_t>());
    else throw ParseError(1, 1, "field kind must be \"Q\" or \"Fp\"");
    out.dim = doc.at("dim").get<int>();
    if (out.dim < 1) throw DimMismatch("dim must be >= 1");
    out.name = doc.value("name", fallback_name);
    for (const json& u : doc.at("unit")) out.unit.push_back(u.get<std::string>());
    if ((int)out.unit.size() != out.dim) throw DimMismatch("unit vector must have length dim");
    const json& mul = doc.at("mul");
    if ((int)mul.size() != out.dim) throw DimMismatch("mul table must have dim rows");
    for (const json& row : mul) {
      if ((int)row.size() != out.dim) throw DimMismatch("mul table rows must have dim entries");
      std::vector<std::vector<std::string>> out_row;
      for (const json& cell : row) {
        if ((int)cell.size() != out.dim) throw DimMismatch("mul table entries must have length dim");
        std::vector<std::string> out_cell;
        for (const json& s : cell) out_cell.push_back(s.get<std::string>());
        out_row.push_back(std::move(out_cell));
      }
      out.mul.push_back(std::move(out_row));
    }
  } catch (const json::exception& e) {
    throw ParseError(1, 1, e.what());
  }
  return out;
}

template <class S>
AlgebraSpec<S> instantiate(const ParsedAlgebra& pa, const S& proto) {
  AlgebraSpec<S> spec;
  spec.name = pa.name;
  spec.dim = pa.dim;
  for (auto& u : pa.unit) spec.unit.push_back(parse_like(proto, u));
  for (auto& row : pa.mul) {
    std::vector<std::vector<S>> r;
    for (auto& cell : row) {
      std::vector<S> c;
      for (auto& s : cell) c.push_back(parse_like(proto, s));
      r.push_back(std::move(c));
    }
    spec.mul.push_back(std::move(r));
  }
  return spec;
}

inline ojson field_json(const Field& f) {
  ojson out;
  out["kind"] = f.kind == FieldKind::Rationals ? "Q" : "Fp";
  if (f.kind == FieldKind::PrimeField) out["p"] = f.p;
  return out;
}

// Per-degree numbers plus optional cup table and derivation/centre bases.
template <class S>
ojson cohomology_report(const std::string& name, CochainComplex<S>& cx, bool with_cup, bool with_bases) {
  ojson rep;
  rep["algebra"] = name;
  rep["field"] = field_json(field_of(cx.proto()));
  rep["unitor_scale"] = cx.ring().inst->unitor_scale().to_string();
  rep["max_degree"] = cx.max_degree();
  ojson degrees = ojson::array();
  ojson dims = ojson::array();
  for (int k = 0; k <= cx.max_degree(); ++k) {
    ojson row;
    row["k"] = k;
    row["dim_C"] = cx.dim_c(k);
    row["rank_d"] = cx.rank_d(k);
    row["dim_ker"] = cx.dim_ker(k);
    row["dim_HH"] = cx.hh_dim(k);
    degrees.push_back(std::move(row));
    dims.push_back(cx.hh_dim(k));
  }
  rep["degrees"] = std::move(degrees);
  rep["dims"] = std::move(dims);
  if (with_cup) {
    ojson table = ojson::array();
    for (int m = 0; m <= cx.max_degree(); ++m)
      for (int n = 0; m + n <= cx.max_degree(); ++n) {
        auto hm = cohomology(cx, m), hn = cohomology(cx, n);
        for (std::size_t i = 0; i < hm.basis.size(); ++i)
          for (std::size_t j = 0; j < hn.basis.size(); ++j) {
            CohomologyClass<S> prod = cup_on_cohomology(cx, hm.basis[i], hn.basis[j]);
            ojson entry;
            entry["m"] = m;
            entry["n"] = n;
            entry["i"] = i;
            entry["j"] = j;
            ojson coords = ojson::array();
            for (auto& c : prod.coords) coords.push_back(c.to_string());
            entry["coords"] = std::move(coords);
            table.push_back(std::move(entry));
          }
      }
    rep["cup_table"] = std::move(table);
  }
  if (with_bases) {
    auto mat_json = [](const Mat<S>& m) {
      ojson rows = ojson::array();
      for (int i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
      }
      return rows;
    };
    ojson zs = ojson::array();
    for (auto& z : centre(cx.ring())) zs.push_back(mat_json(z.mor.mat));
    rep["centre"] = std::move(zs);
    ojson ders = ojson::array();
    for (auto& f : derivations(cx.ring())) ders.push_back(mat_json(f.mor.mat));
    rep["derivations"] = std::move(ders);
    ojson inners = ojson::array();
    for (auto& f : inner_derivations(cx.ring())) inners.push_back(mat_json(f.mor.mat));
    rep["inner_derivations"] = std::move(inners);
  }
  return rep;
}

// --- self test -----------------------------------------------------------------

namespace detail {

struct SuiteLog {
  std::ostream& out;
  bool all_pass = true;
  void line(const std::string& suite, bool pass, const std::string& note = "") {
    all_pass = all_pass && pass;
    out << (pass ? "[pass] " : "[FAIL] ") << suite;
    if (!note.empty()) out << " (" << note << ")";
    out << "\n";
  }
};

template <class S>
Cochain<S> random_cochain(Rng& rng, const RingObject<S>& r, int k) {
  long dom = 1;
  for (int i = 0; i < k; ++i) dom *= r.dim();
  return make_cochain(r, k, random_mat(rng, r.dim(), (int)dom, r.inst->proto()));
}

inline std::vector<std::pair<Field, long>> selftest_grid() {
  return {{Field::rationals(), 1}, {Field::rationals(), 2}, {Field::prime(2), 1},
          {Field::prime(5), 1},    {Field::prime(5), 3}};
}

template <class S>
void run_selftest_suites(SuiteLog& log, Rng& rng, const S& proto, long scale_int) {
  const std::string tag = field_of(proto).to_string() + " c=" + std::to_string(scale_int);
  S scale = from_int(proto, scale_int);

  {
    auto inst = Instance<S>::make(proto, {{"R", 2}, {"X", 3}}, scale, true);
    InstanceReport rep = verify_instance(inst, rng());
    std::string bad;
    for (auto& c : rep.checks)
      if (!c.pass) bad += c.name + ";";
    log.line("coherence axioms " + tag, rep.all_pass(), bad);
  }

  for (auto& spec : catalog_specs<S>(proto)) {
    RingObject<S> r = make_ring(spec, proto, scale);
    bool complex_ok = true;
    std::string note;
    try {
      CochainComplex<S> cx(r, 4);
      for (auto& c : cx.verify_complex()) complex_ok = complex_ok && c.pass;
      std::ostringstream dims;
      for (int k = 0; k <= 4; ++k) dims << (k ? " " : "") << cx.hh_dim(k);
      note = "HH dims " + dims.str();
    } catch (const Error& e) {
      complex_ok = false;
      note = e.what();
    }
    log.line("cochain complex d.d = 0, " + spec.name + " " + tag, complex_ok, note);
  }
}

template <class S>
void run_graded_commutativity(SuiteLog& log, const S& proto, long scale_int, int kmax) {
  S scale = from_int(proto, scale_int);
  const std::string tag = field_of(proto).to_string() + " c=" + std::to_string(scale_int);
  for (auto& spec : catalog_specs<S>(proto)) {
    if (spec.dim > 3 && kmax > 3) continue;
    RingObject<S> r = make_ring(spec, proto, scale);
    CochainComplex<S> cx(r, kmax);
    bool ok = true;
    std::string note;
    for (int m = 0; m <= kmax && ok; ++m)
      for (int n = 0; m + n <= kmax && ok; ++n) {
        auto hm = cohomology(cx, m), hn = cohomology(cx, n);
        for (auto& a : hm.basis)
          for (auto& b : hn.basis) {
            Cochain<S> ab = cup(a.representative, b.representative);
            Cochain<S> ba = cup(b.representative, a.representative);
            Cochain<S> defect = (m * n) % 2 == 0 ? ba - ab : ba + ab;
            int k = m + n;
            bool this_ok;
            if (k == 0) this_ok = defect.mor.is_zero();
            else this_ok = defect.mor.is_zero() ||
                           membership(defect.vec(), cx.reduced(k - 1).image_basis, proto).has_value();
            if (!this_ok) {
              ok = false;
              note = "degree pair (" + std::to_string(m) + "," + std::to_string(n) + ")";
            }
          }
      }
    log.line("graded commutativity, " + spec.name + " " + tag, ok, note);
  }
}

}  // namespace detail

inline bool selftest(std::uint64_t seed, std::ostream& out) {
  detail::SuiteLog log{out};
  out << "selftest, seed " << seed << "\n";
  Rng rng(seed);

  for (auto& [field, scale] : detail::selftest_grid()) {
    if (field.kind == FieldKind::Rationals) detail::run_selftest_suites(log, rng, Rat(), scale);
    else detail::run_selftest_suites(log, rng, Fp(0, field.p), scale);
  }

  {
    // insertion-rule identities, random triples over F7
    Fp proto(0, 7);
    bool ok = true;
    int checked = 0;
    std::string note;
    for (int t = 0; t < 20 && ok; ++t) {
      auto specs = catalog_specs<Fp>(proto);
      AlgebraSpec<Fp> spec = draw(rng, 2) == 0 ? specs[2] : specs[3];  // dual or trunc3
      RingObject<Fp> r = make_ring(spec, proto, Fp(1 + (long)draw(rng, 2), 7));
      int m = 1 + (int)draw(rng, 3), n = 1 + (int)draw(rng, 3), p = 1 + (int)draw(rng, 3);
      Cochain<Fp> f = detail::random_cochain(rng, r, m);
      Cochain<Fp> g = detail::random_cochain(rng, r, n);
      Cochain<Fp> h = detail::random_cochain(rng, r, p);
      for (int i = 1; i <= m && ok; ++i)
        for (int j = 1; j <= m + n - 1 && ok; ++j) {
          if (!verify_prelie_axioms(f, g, h, i, j).mor.is_zero()) {
            ok = false;
            note = "triple degrees (" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) +
                   ") slots (" + std::to_string(i) + "," + std::to_string(j) + ")";
          }
          ++checked;
        }
      if (!prelie_difference_defect(f, g, h).mor.is_zero() || !prelie_symmetry_defect(f, g, h).mor.is_zero()) {
        ok = false;
        note = "composition-product formulas";
      }
      IdentityDefects<Fp> defects = verify_identities(f, g);
      if (!defects.all_zero()) {
        ok = false;
        note = "cup/differential identity suite";
      }
    }
    log.line("pre-Lie and cup identities over F7", ok, std::to_string(checked) + " slot pairs");
  }

  detail::run_graded_commutativity(log, Rat(), 1, 4);
  detail::run_graded_commutativity(log, Fp(0, 2), 1, 4);

  {
    // square-zero extensions along HH^2 representatives, both scales
    bool ok = true;
    std::string note;
    for (long c : {1L, 2L}) {
      for (auto& name : {std::string("dual"), std::string("trunc3")}) {
        for (auto& spec : catalog_specs<Rat>(Rat())) {
          if (spec.name != name) continue;
          RingObject<Rat> r = make_ring(spec, Rat(), Rat(c));
          CochainComplex<Rat> cx(r, 3);
          for (auto& cls : cohomology(cx, 2).basis) {
            try {
              Extension<Rat> ext = build_extension(r, cls.representative);
              if (!check_extension_ring(ext).all_pass()) ok = false;
            } catch (const Error&) {
              ok = false;
            }
            if (!ok) note = name + " c=" + std::to_string(c);
          }
        }
      }
    }
    log.line("square-zero extensions along HH^2 classes", ok, note);
  }

  {
    // extensions along coboundaries are isomorphic to the trivial one
    bool ok = true;
    for (auto& spec : catalog_specs<Rat>(Rat())) {
      if (spec.name != "dual") continue;
      RingObject<Rat> r = make_ring(spec, Rat(), Rat(1));
      Cochain<Rat> zero2 = make_cochain(r, 2, Mat<Rat>(2, 4, Rat()));
      for (int t = 0; t < 5; ++t) {
        Cochain<Rat> h = detail::random_cochain(rng, r, 1);
        ExtensionIsomorphism<Rat> iso = extension_isomorphism(r, zero2, h);
        Mat<Rat> id = Mat<Rat>::identity(4, Rat());
        ok = ok && compose(iso.psi, iso.phi).mat == id && compose(iso.phi, iso.psi).mat == id &&
             check_ring_morphism(iso.phi, iso.along_f.total, iso.along_g.total).all_pass() &&
             check_ring_morphism(iso.psi, iso.along_g.total, iso.along_f.total).all_pass();
      }
    }
    log.line("coboundary extensions are trivial", ok);
  }

  {
    // bracket conventions at degree (1,1): the standard sign gives the
    // commutator; the literal sign gives the anticommutator, which is the
    // documented, expected divergence that motivates the convention flag.
    Fp proto(0, 7);
    RingObject<Fp> r = make_ring(catalog_specs<Fp>(proto)[2], proto, Fp(1, 7));
    bool standard_ok = true, literal_diverges = false, literal_anti = true;
    for (int t = 0; t < 5; ++t) {
      Cochain<Fp> f = detail::random_cochain(rng, r, 1), g = detail::random_cochain(rng, r, 1);
      Mat<Fp> comm = compose(f.mor, g.mor).mat - compose(g.mor, f.mor).mat;
      Mat<Fp> anti = compose(f.mor, g.mor).mat + compose(g.mor, f.mor).mat;
      standard_ok = standard_ok && gerstenhaber_bracket(f, g).mor.mat == comm;
      Mat<Fp> lit = gerstenhaber_bracket(f, g, SignConvention::PaperLiteral).mor.mat;
      literal_anti = literal_anti && lit == anti;
      literal_diverges = literal_diverges || lit != comm;
    }
    log.line("bracket sign conventions", standard_ok && literal_anti && literal_diverges,
             "literal convention diverges from the commutator as expected");
  }

  out << (log.all_pass ? "all suites passed" : "SUITE FAILURES PRESENT") << "\n";
  return log.all_pass;
}

// --- command driver --------------------------------------------------------------

struct CommandError : Error {
  int code;
  CommandError(int code_, const std::string& msg) : Error(msg), code(code_) {}
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CommandError(2, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string stem_of(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

inline void check_budget(int dim, int max_degree) {
  double homs = dim;
  for (int i = 0; i <= max_degree; ++i) homs *= dim;
  if (homs * dim > 1e6)
    throw CommandError(2, "refusing to materialize C^" + std::to_string(max_degree + 1) + ": " +
                              std::to_string(dim) + "^" + std::to_string(max_degree + 2) +
                              " Hom-coordinates exceed 10^6; lower --max-degree");
}

template <class S>
int run_cohomology(const ParsedAlgebra& pa, const S& proto, const std::string& scale_str, int max_degree,
                   bool as_json, bool with_cup, bool with_bases, std::ostream& out) {
  S scale = parse_like(proto, scale_str);
  if (scale.is_zero()) throw CommandError(2, "unitor scale must be nonzero");
  AlgebraSpec<S> spec = instantiate(pa, proto);
  check_budget(spec.dim, max_degree);
  RingObject<S> r = make_ring(spec, proto, scale);
  CochainComplex<S> cx(r, max_degree);
  if (as_json) {
    out << cohomology_report(pa.name, cx, with_cup, with_bases).dump(2) << "\n";
    return 0;
  }
  out << "algebra " << pa.name << " over " << field_of(proto).to_string() << ", dim " << spec.dim
      << ", unitor scale " << scale.to_string() << ", max degree " << max_degree << "\n";
  out << " k | dim C^k | rank d^k | dim ker d^k | dim HH^k\n";
  for (int k = 0; k <= max_degree; ++k) {
    out << " " << k << " | " << cx.dim_c(k) << " | " << cx.rank_d(k) << " | " << cx.dim_ker(k) << " | "
        << cx.hh_dim(k) << "\n";
  }
  for (int k = 0; k <= max_degree; ++k) out << (k ? " " : "") << cx.hh_dim(k);
  out << "\n";
  return 0;
}

template <class S>
int run_cup_table(const ParsedAlgebra& pa, const S& proto, const std::string& scale_str, int max_degree,
                  std::ostream& out) {
  S scale = parse_like(proto, scale_str);
  if (scale.is_zero()) throw CommandError(2, "unitor scale must be nonzero");
  AlgebraSpec<S> spec = instantiate(pa, proto);
  check_budget(spec.dim, max_degree);
  RingObject<S> r = make_ring(spec, proto, scale);
  CochainComplex<S> cx(r, max_degree);
  out << "cup products of HH basis classes, " << pa.name << ", degrees up to " << max_degree << "\n";
  for (int m = 0; m <= max_degree; ++m)
    for (int n = 0; m + n <= max_degree; ++n) {
      auto hm = cohomology(cx, m), hn = cohomology(cx, n);
      for (std::size_t i = 0; i < hm.basis.size(); ++i)
        for (std::size_t j = 0; j < hn.basis.size(); ++j) {
          CohomologyClass<S> prod = cup_on_cohomology(cx, hm.basis[i], hn.basis[j]);
          out << "HH^" << m << "[" << i << "] . HH^" << n << "[" << j << "] =";
          if (prod.coords.empty()) out << " 0";
          for (std::size_t q = 0; q < prod.coords.size(); ++q)
            out << " " << prod.coords[q].to_string() << "*HH^" << m + n << "[" << q << "]";
          out << "\n";
        }
    }
  return 0;
}

template <class S>
int run_bases(const ParsedAlgebra& pa, const S& proto, bool want_centre, std::ostream& out) {
  AlgebraSpec<S> spec = instantiate(pa, proto);
  RingObject<S> r = make_ring(spec, proto, one_like(proto));
  auto print_mat = [&](const Mat<S>& m) {
    out << "  " << m.to_string() << "\n";
  };
  if (want_centre) {
    auto z = centre(r);
    out << "centre of " << pa.name << ": dimension " << z.size() << "\n";
    for (auto& c : z) print_mat(c.mor.mat);
  } else {
    auto der = derivations(r);
    auto inner = inner_derivations(r);
    out << "derivations of " << pa.name << ": dimension " << der.size() << "\n";
    for (auto& c : der) print_mat(c.mor.mat);
    out << "inner derivations: dimension " << inner.size() << "\n";
    for (auto& c : inner) print_mat(c.mor.mat);
    out << "HH^1 dimension " << (der.size() - inner.size()) << "\n";
  }
  return 0;
}

template <class S>
int run_validate(const ParsedAlgebra& pa, const S& proto, std::ostream& out) {
  AlgebraSpec<S> spec = instantiate(pa, proto);
  try {
    RingObject<S> r = make_ring(spec, proto, one_like(proto));
    RingReport rep = check_ring_object(r);
    out << pa.name << ": valid ring object over " << field_of(proto).to_string() << ", dim " << spec.dim
        << "\n";
    for (auto& c : rep.checks) out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
    return rep.all_pass() ? 0 : 1;
  } catch (const NotAssociative& e) {
    out << pa.name << ": INVALID, " << e.what() << "\n";
    return 1;
  } catch (const UnitFails& e) {
    out << pa.name << ": INVALID, " << e.what() << "\n";
    return 1;
  }
}

template <class S>
int run_extension(const ParsedAlgebra& pa, const S& proto, const std::string& scale_str, int cocycle_index,
                  std::ostream& out) {
  S scale = parse_like(proto, scale_str);
  if (scale.is_zero()) throw CommandError(2, "unitor scale must be nonzero");
  AlgebraSpec<S> spec = instantiate(pa, proto);
  RingObject<S> r = make_ring(spec, proto, scale);
  CochainComplex<S> cx(r, 3);
  auto h2 = cohomology(cx, 2);
  out << "HH^2(" << pa.name << ") has dimension " << h2.dim << "\n";
  if (cocycle_index < 0 || cocycle_index >= h2.dim)
    throw CommandError(2, "cocycle index " + std::to_string(cocycle_index) + " outside 0.." +
                              std::to_string(h2.dim - 1));
  Extension<S> ext = build_extension(r, h2.basis[cocycle_index].representative);
  RingReport rep = check_extension_ring(ext);
  out << "extension along HH^2 basis class " << cocycle_index << ": dim " << ext.total.dim() << "\n";
  for (auto& c : rep.checks) out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace detail

// Subcommands: validate | cohomology | cup-table | derivations | centre |
// extension | selftest. Exit 0 on success, 1 on mathematical failure, 2 on
// usage or parse errors.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto usage = [&]() {
    err << "usage: hochcat <command> [options]\n"
           "  validate FILE\n"
           "  cohomology FILE [--max-degree K] [--unitor-scale C] [--json] [--cup-table] [--bases]\n"
           "  cup-table FILE [--max-degree K] [--unitor-scale C]\n"
           "  derivations FILE\n"
           "  centre FILE\n"
           "  extension FILE --cocycle-index I [--unitor-scale C]\n"
           "  selftest [--seed S]\n";
    return 2;
  };
  try {
    if (args.empty()) return usage();
    const std::string cmd = args[0];
    std::string file, scale = "1";
    int max_degree = 4, cocycle_index = 0;
    std::uint64_t seed = 1;
    bool as_json = false, with_cup = false, with_bases = false;
    for (std::size_t i = 1; i < args.size(); ++i) {
      const std::string& a = args[i];
      auto next = [&]() -> const std::string& {
        if (i + 1 >= args.size()) throw CommandError(2, "missing value for " + a);
        return args[++i];
      };
      if (a == "--max-degree") max_degree = std::stoi(next());
      else if (a == "--unitor-scale") scale = next();
      else if (a == "--cocycle-index") cocycle_index = std::stoi(next());
      else if (a == "--seed") seed = std::stoull(next());
      else if (a == "--json") as_json = true;
      else if (a == "--cup-table") with_cup = true;
      else if (a == "--bases") with_bases = true;
      else if (!a.empty() && a[0] == '-') throw CommandError(2, "unknown option " + a);
      else if (file.empty()) file = a;
      else throw CommandError(2, "unexpected argument " + a);
    }
    if (max_degree < 0) throw CommandError(2, "--max-degree must be >= 0");

    if (cmd == "selftest") return selftest(seed, out) ? 0 : 1;
    if (cmd != "validate" && cmd != "cohomology" && cmd != "cup-table" && cmd != "derivations" &&
        cmd != "centre" && cmd != "extension")
      return usage();
    if (file.empty()) throw CommandError(2, cmd + " needs an algebra file");

    ParsedAlgebra pa = parse_algebra(detail::read_file(file), detail::stem_of(file));
    auto dispatch = [&](auto proto) -> int {
      using S = decltype(proto);
      if (cmd == "validate") return detail::run_validate<S>(pa, proto, out);
      if (cmd == "cohomology")
        return detail::run_cohomology<S>(pa, proto, scale, max_degree, as_json, with_cup, with_bases, out);
      if (cmd == "cup-table") return detail::run_cup_table<S>(pa, proto, scale, max_degree, out);
      if (cmd == "derivations") return detail::run_bases<S>(pa, proto, false, out);
      if (cmd == "centre") return detail::run_bases<S>(pa, proto, true, out);
      return detail::run_extension<S>(pa, proto, scale, cocycle_index, out);
    };
    if (pa.field.kind == FieldKind::Rationals) return dispatch(Rat());
    return dispatch(Fp(0, pa.field.p));
  } catch (const CommandError& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadScalar& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotPrime& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAssociative& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UnitFails& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hochcat::cli
