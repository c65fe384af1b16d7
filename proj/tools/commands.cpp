#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "acceptance_suite.hpp"
#include "seamrep/cell_module.hpp"
#include "seamrep/errors.hpp"
#include "seamrep/gl_morphism.hpp"
#include "seamrep/pretty.hpp"
#include "seamrep/serialize.hpp"
#include "seamrep/structure.hpp"

namespace seamrep::cli {

namespace {

using io::Json;

struct Config {
  int n = 0;
  int k = 0;
  std::optional<int> order, ell, d, s, t;
  int nmax = 8;
  std::string format = "text";
  std::string out_path;
  bool blocks = false;
  int jobs = 1;
};

std::optional<UnityOrder> order_of(const Config& c) {
  if (c.order && c.ell) throw ParameterConstraint("give either --order or --ell, not both");
  if (c.order) return UnityOrder(*c.order);
  if (c.ell) {
    if (*c.ell < 1) throw ParameterConstraint("--ell must be positive");
    return UnityOrder::from_ell(*c.ell);
  }
  return std::nullopt;
}

long long max_dim() {
  const char* v = std::getenv("SEAMREP_MAX_DIM");
  if (!v || !*v) return 3000;
  try {
    size_t used = 0;
    long long m = std::stoll(v, &used);
    if (used == std::string(v).size() && m > 0) return m;
  } catch (const std::exception&) {
  }
  throw ParameterConstraint(std::string("SEAMREP_MAX_DIM must be a positive integer, got '") + v + "'");
}

void check_size(int n, int k, int d) {
  const long long dim = cell_dimension(n, k, d), cap = max_dim();
  if (dim > cap)
    throw ParameterConstraint("Cell^" + std::to_string(d) + " has dimension " + std::to_string(dim) +
                              ", above SEAMREP_MAX_DIM=" + std::to_string(cap));
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  throw ParameterConstraint("format '" + c.format + "' is not available for this command");
}

std::string order_text(const std::optional<UnityOrder>& o) {
  if (!o) return "generic q";
  return "q of order " + std::to_string(o->N) + " (ell = " + std::to_string(o->ell) + ")";
}

std::string join(const std::vector<int>& v, const std::string& sep = " ") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

template <class S>
std::string matrix_text(const ExactMatrix<S>& m, const std::string& indent = "  ") {
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(m.rows()));
  std::vector<size_t> width(static_cast<size_t>(m.cols()), 1);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      auto s = pretty(m(i, j));
      width[static_cast<size_t>(j)] = std::max(width[static_cast<size_t>(j)], s.size());
      cells[static_cast<size_t>(i)].push_back(std::move(s));
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    os << indent;
    for (size_t j = 0; j < row.size(); ++j)
      os << row[j] << std::string(width[j] - row[j].size() + (j + 1 < row.size() ? 2 : 0), ' ');
    os << "\n";
  }
  return os.str();
}

std::string int_table(const std::vector<std::vector<int>>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::ostringstream os;
  os << "       ";
  for (int c : cols) os << (c < 10 ? "  " : " ") << c;
  os << "\n";
  for (size_t i = 0; i < m.size(); ++i) {
    os << "  d=" << rows[i] << (rows[i] < 10 ? " " : "") << " ";
    for (int x : m[i]) os << "  " << x;
    os << "\n";
  }
  return os.str();
}

void report(const Config& c, std::ostream& os) {
  require_format(c, {"text", "json"});
  auto r = structure_report(c.n, c.k, order_of(c));
  if (c.format == "json") {
    os << io::dump(io::to_json(r));
    return;
  }
  os << "B(" << r.n << "," << r.k << "), " << order_text(r.order) << "\n";
  os << "dim B = " << r.dim_algebra << "\n";
  os << "Delta  = " << join(r.delta) << "\n";
  os << "Delta0 = " << join(r.delta0) << "\n";
  os << "orbits:";
  for (const auto& o : r.orbit_classes) os << " {" << join(o, ",") << "}";
  os << "\n\ncells:\n";
  for (const auto& x : r.cells) {
    os << "  d=" << x.d << ": Cell " << x.dim_cell << ", Rad " << x.dim_rad << ", Irre " << x.dim_irre << ", Proj "
       << x.dim_proj;
    if (x.critical) os << ", critical";
    if (!x.in_delta0)
      os << ", not in Delta0";
    else if (x.dim_rad == 0)
      os << ", irreducible";
    else
      os << ", reducible";
    os << "\n      " << x.cell_sequence << "\n";
    if (!x.proj_sequence.empty()) os << "      " << x.proj_sequence << "\n";
  }
  os << "\nD (rows Delta, columns Delta0):\n" << int_table(r.D, r.delta, r.delta0);
  os << "\nC = D^T D (rows and columns Delta0):\n" << int_table(r.C, r.delta0, r.delta0);
}

template <class F>
void gram(const Config& c, F f, std::ostream& os) {
  using S = typename F::Scalar;
  const auto order = f.order();
  validate_rest_para(c.n, c.k, order);
  if (!c.d) throw ParameterConstraint("gram needs --d");
  const int d = *c.d;
  if (!in_delta(c.n, c.k, d))
    throw NotInDelta("d=" + std::to_string(d) + " is not in Delta_{" + std::to_string(c.n) + "," + std::to_string(c.k) +
                     "} = {" + join(delta(c.n, c.k), ",") + "}");
  check_size(c.n, c.k, d);
  if (c.jobs < 1) throw ParameterConstraint("--jobs must be at least 1");

  auto ctx = make_seam_context(f, c.n, c.k);
  CellBasis<F> b(ctx, d);
  ExactMatrix<S> G = gram_matrix(b, c.jobs, GramMethod::FastWhereApplicable);
  S det = determinant(G);
  std::optional<S> formula;
  if constexpr (std::is_same_v<F, GenericQ>) {
    formula = det_formula(c.n, c.k, d);
  } else {
    try {
      formula = specialize(det_formula(c.n, c.k, d), *order);
    } catch (const DenominatorVanishes&) {
    }
  }
  const auto rk = rank(G);
  ExactMatrix<S> K = kernel(G);
  std::optional<ChangeOfBasis<F>> cb;
  if (c.blocks) {
    if constexpr (std::is_same_v<F, RootOfUnity>) {
      if (order->ell <= d + 1)
        cb = change_of_basis_at(CellBasis<GenericQ>(make_seam_context(GenericQ{}, c.n, c.k), d), *order);
    }
    if (!cb) cb = change_of_basis(b);
  }

  if (c.format == "json") {
    Json basis = Json::array();
    for (const auto& w : b.diagrams()) basis.push_back(io::to_json(w));
    Json j{{"n", c.n},
           {"k", c.k},
           {"d", d},
           {"order", order ? Json(order->N) : Json(nullptr)},
           {"basis", basis},
           {"gram", io::to_json(G)},
           {"det", io::to_json(det)},
           {"det_text", pretty(det)},
           {"formula", formula ? io::to_json(*formula) : Json(nullptr)},
           {"rank", rk},
           {"kernel", io::to_json(ExactMatrix<S>(K.transpose()))}};
    if (cb) {
      Json fam = Json::array();
      for (const auto& w : cb->fam1) fam.push_back(io::to_json(w));
      for (const auto& w : cb->fam2) fam.push_back(io::to_json(w));
      j["blocks"] = Json{{"order", fam},
                         {"U", io::to_json(cb->U)},
                         {"transformed", io::to_json(cb->transformed)},
                         {"block1", io::to_json(cb->block1)},
                         {"block2", io::to_json(cb->block2)},
                         {"unitriangular", cb->unitriangular},
                         {"block_diagonal", cb->block_diagonal}};
    }
    os << io::dump(j);
  } else {
    os << "Gram matrix of Cell^" << d << " over B(" << c.n << "," << c.k << "), " << order_text(order) << "\n";
    os << "basis:\n";
    for (size_t i = 0; i < b.size(); ++i) os << "  w" << i << " = " << b.diagram(i).to_string() << "\n";
    os << "G =\n" << matrix_text(G);
    os << "det     = " << pretty(det) << "\n";
    os << "formula = " << (formula ? pretty(*formula) : std::string("undefined at this q")) << "\n";
    os << "rank    = " << rk << " of " << b.size() << "\n";
    os << "radical dimension " << K.cols() << "\n";
    if (K.cols() > 0) os << "radical basis (rows, coordinates in w0..):\n" << matrix_text(ExactMatrix<S>(K.transpose()));
    if (cb) {
      os << "\nchange of basis: " << cb->fam1.size() << " + " << cb->fam2.size() << " vectors, unitriangular "
         << (cb->unitriangular ? "yes" : "no") << ", block diagonal " << (cb->block_diagonal ? "yes" : "no") << "\n";
      os << "first block (Gram^" << d - 1 << " of B(" << c.n - 1 << "," << c.k << ")):\n" << matrix_text(cb->block1);
      os << "second block ([" << d + 2 << "]/[" << d + 1 << "] Gram^" << d + 1 << " of B(" << c.n - 1 << "," << c.k
         << ")):\n"
         << matrix_text(cb->block2);
    }
  }
  if (formula && *formula != det) throw VerificationFailed("determinant disagrees with the closed formula");
  if (cb && !(cb->unitriangular && cb->block_diagonal)) throw VerificationFailed("change of basis is not block diagonal");
}

void morphism(const Config& c, std::ostream& os) {
  require_format(c, {"text", "json"});
  auto order = order_of(c);
  if (!order) throw ParameterConstraint("morphism needs --order or --ell");
  if (!c.s || !c.t) throw ParameterConstraint("morphism needs --s and --t");
  auto ctx = make_seam_context(RootOfUnity(*order), c.n, c.k);
  for (int d : {*c.s, *c.t})
    if (in_delta(c.n, c.k, d)) check_size(c.n, c.k, d);
  auto m = theta_restricted(ctx, *c.s, *c.t);
  auto chk = verify_image_is_radical(ctx, m);
  if (c.format == "json") {
    Json j = io::to_json(m, chk);
    j["n"] = c.n;
    j["k"] = c.k;
    j["order"] = order->N;
    os << io::dump(j);
  } else {
    os << "morphism Cell^" << m.s << " -> Cell^" << m.t << " of B(" << c.n << "," << c.k << "), " << order_text(order)
       << "\n";
    os << "monic (" << m.s << "," << m.t << ") diagrams w, H(w) and signs:\n";
    for (size_t i = 0; i < m.ws.size(); ++i) {
      os << "  " << m.ws[i].to_string() << "  H = " << pretty(RationalFunction(m.H[i]));
      if (m.contributes[i])
        os << "  sign " << (m.signs[i] > 0 ? "+" : "-");
      else
        os << "  (no contribution)";
      os << "\n";
    }
    os << "theta (rows: basis of Cell^" << m.t << ", columns: basis of Cell^" << m.s << "):\n" << matrix_text(m.theta);
    os << "rank " << chk.rank << ", dim Rad^" << m.t << " = " << chk.dim_rad << "\n";
    os << "image in radical: " << (chk.in_radical ? "yes" : "no") << "\n";
    os << "intertwining " << (chk.intertwines ? "OK" : "FAILED") << "\n";
  }
  if (!chk.ok()) throw VerificationFailed("morphism check failed");
}

void bratteli_cmd(const Config& c, std::ostream& os) {
  require_format(c, {"text", "json", "dot"});
  if (c.k < 0 || c.nmax < 1) throw ParameterConstraint("bratteli needs k >= 0 and nmax >= 1");
  auto b = bratteli(c.nmax, c.k, order_of(c));
  if (c.format == "dot")
    os << bratteli_dot(b);
  else if (c.format == "json")
    os << io::dump(io::to_json(b));
  else
    os << bratteli_text(b);
}

int selftest(std::ostream& os) {
  std::ostream quiet(nullptr);
  auto results = acceptance::run_all(acceptance::Scale::bounded(), quiet);
  int failed = 0;
  for (const auto& r : results) {
    os << acceptance::format_line(r) << "\n";
    failed += r.pass ? 0 : 1;
  }
  os << (results.size() - static_cast<size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed ? Verification : Ok;
}

int exit_code_for(const Error& e) {
  const auto& kind = e.kind();
  if (kind == "ParameterConstraint" || kind == "ParseError") return Usage;
  if (kind == "NotInDelta" || kind == "NotMirrorPair" || kind == "CriticalD" || kind == "IndexOutOfRange")
    return OutOfDelta;
  return Verification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact computations for Temperley-Lieb and boundary seam algebras"};
  app.require_subcommand(1);

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", c.order, "multiplicative order N of q (omit for generic q)");
    sub->add_option("--ell", c.ell, "shorthand for --order 2*ell");
  };
  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "number of bulk points")->required();
    sub->add_option("--k", c.k, "number of boundary points")->required();
  };
  auto add_output = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--format", c.format, formats);
    sub->add_option("--out", c.out_path, "write to this file instead of stdout");
  };

  auto* rep = app.add_subcommand("report", "structure report: orbits, dimensions, exact sequences, D and C");
  add_nk(rep);
  add_order(rep);
  add_output(rep, "text | json");

  auto* gr = app.add_subcommand("gram", "Gram matrix, determinant, rank and radical of one cellular module");
  add_nk(gr);
  add_order(gr);
  gr->add_option("--d", c.d, "number of defects")->required();
  gr->add_flag("--blocks", c.blocks, "also print the change-of-basis block form");
  gr->add_option("--jobs", c.jobs, "worker threads for the Gram entries");
  add_output(gr, "text | json");

  auto* mo = app.add_subcommand("morphism", "Graham-Lehrer morphism Cell^s -> Cell^t at a root of unity");
  add_nk(mo);
  add_order(mo);
  mo->add_option("--s", c.s, "source defect count")->required();
  mo->add_option("--t", c.t, "target defect count")->required();
  add_output(mo, "text | json");

  auto* br = app.add_subcommand("bratteli", "Bratteli diagram rows with critical lines and orbit classes");
  br->add_option("--k", c.k, "number of boundary points")->required();
  br->add_option("--nmax", c.nmax, "last row");
  add_order(br);
  add_output(br, "text | json | dot");

  auto* st = app.add_subcommand("selftest", "acceptance criteria at bounded size");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  std::ostringstream buf;
  int code = Ok;
  try {
    if (*rep)
      report(c, buf);
    else if (*gr) {
      require_format(c, {"text", "json"});
      if (auto o = order_of(c))
        gram(c, RootOfUnity(*o), buf);
      else
        gram(c, GenericQ{}, buf);
    } else if (*mo)
      morphism(c, buf);
    else if (*br)
      bratteli_cmd(c, buf);
    else if (*st)
      code = selftest(buf);
  } catch (const Error& e) {
    code = exit_code_for(e);
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    code = Verification;
    err << "error: " << e.what() << "\n";
  }

  // partial output is still written; verification failures print what was computed
  if (!buf.str().empty()) {
    if (c.out_path.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(c.out_path, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << c.out_path << "\n";
        return Usage;
      }
      f << buf.str();
    }
  }
  return code;
}

}  // namespace seamrep::cli
