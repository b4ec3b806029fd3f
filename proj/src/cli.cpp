#include "lowdeg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lowdeg/errors.hpp"
#include "lowdeg/json_io.hpp"
#include "lowdeg/selftest.hpp"
#include "lowdeg/surface_model.hpp"

namespace lowdeg::cli {

namespace {

using json::Json;

std::size_t max_rank_from_env() {
  const char* raw = std::getenv("LOWDEG_MAX_RANK");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxRank;
  Integer v = parse_integer(raw);
  if (v < 1 || v > 64) throw InputError("LOWDEG_MAX_RANK must be an integer in 1..64, got " + std::string(raw));
  return static_cast<std::size_t>(v.get_ui());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json(const std::string& path) { return json::parse(read_file(path), path); }

void require_readable(const std::optional<std::string>& path) {
  if (path && !std::ifstream(*path)) throw InputError("cannot read " + *path);
}

void require_writable(const std::string& path) {
  if (path.empty()) return;
  std::ofstream probe(path, std::ios::app);
  if (!probe) throw InputError("cannot write " + path);
}

bool yes_no(const std::string& v) { return v == "yes"; }

std::optional<bool> tri_state(const std::optional<std::string>& v) {
  if (!v) return std::nullopt;
  return yes_no(*v);
}

std::vector<Integer> parse_degree_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_integer(item));
  return out;
}

/// Where a result goes: stdout or a file, as JSON or as an ASCII table.
struct Sink {
  bool as_json = false;
  std::string path;

  void emit(std::ostream& out, const Json& j, const std::string& table) const {
    const std::string text = as_json ? json::render(j) : table;
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write " + path);
    file << text;
  }
};

void add_json_option(CLI::App* cmd, std::string& path) {
  cmd->add_option("--json", path, "Write JSON instead of a table (to FILE when given)")->expected(0, 1);
}

Sink make_sink(const CLI::App* cmd, const std::string& path) {
  Sink s;
  s.as_json = cmd->count("--json") > 0;
  s.path = path;
  require_writable(s.path);
  return s;
}

std::string join(const std::vector<DivisorClass>& classes) {
  if (classes.empty()) return "(none)";
  std::string out;
  for (const auto& c : classes) out += (out.empty() ? "" : " ") + c.str();
  return out;
}

std::string interval(const Integer& lo, const Integer& hi) {
  return lo == hi ? to_string(lo) : "[" + to_string(lo) + ", " + to_string(hi) + "]";
}

std::string ch_str(const ChernCharacter& ch) {
  return "(" + to_string(ch.ch0) + ", " + ch.ch1.str() + ", " + to_string(ch.ch2) + ")";
}

// ---- exc ----------------------------------------------------------------

struct ExcArgs {
  std::optional<std::string> lattice, cone, model;
  std::optional<std::string> p;
  std::string json;
};

int run_exc(const CLI::App* cmd, const ExcArgs& a, std::ostream& out) {
  require_readable(a.lattice);
  require_readable(a.cone);
  Sink sink = make_sink(cmd, a.json);
  const std::size_t max_rank = max_rank_from_env();

  std::optional<SurfaceModel> model;
  if (a.model) model = builtin_model(*a.model, std::nullopt);
  if (!model && !a.lattice) throw InputError("exc needs --lattice or --model");
  if (model && a.lattice) throw InputError("exc takes either --lattice or --model, not both");
  IntersectionLattice lattice = model ? model->lattice() : json::lattice_from_json(load_json(*a.lattice));

  std::optional<RationalCone> cone;
  if (a.cone) cone = json::cone_from_json(lattice, load_json(*a.cone), max_rank);
  else if (model) cone = model->ample_cone();
  else throw InputError("exc needs --cone when no --model is given");

  DivisorClass p;
  if (a.p) p = json::parse_class(*a.p);
  else if (model) p = model->reference_ample();
  else throw InputError("exc needs --p when no --model is given");
  lattice.check(p);

  ExcReport report = exc_set(*cone, p);

  std::ostringstream t;
  t << "exceptional classes (9 H.P > H.H) for P = " << p.str() << "\n";
  t << "slice minimum   " << to_string(report.slice_min) << "\n";
  t << "level bound     " << to_string(report.level_bound) << "\n";
  t << "members         " << report.members.size() << "\n";
  if (!report.members.empty()) {
    t << "  " << std::left << std::setw(20) << "class" << std::right << std::setw(10) << "H.H"
      << std::setw(10) << "9 H.P" << "\n";
    for (const auto& m : report.members) {
      t << "  " << std::left << std::setw(20) << m.cls.str() << std::right << std::setw(10)
        << to_string(m.square) << std::setw(10) << to_string(m.nine_p_degree) << "\n";
    }
  }
  sink.emit(out, json::exc_report_to_json(report), t.str());
  return kOk;
}

// ---- sheaf --------------------------------------------------------------

struct SheafArgs {
  std::optional<std::string> lattice, model, polarization;
  std::string curve, e, json;
};

int run_sheaf(const CLI::App* cmd, const SheafArgs& a, std::ostream& out) {
  require_readable(a.lattice);
  Sink sink = make_sink(cmd, a.json);
  if (a.lattice.has_value() == a.model.has_value()) throw InputError("sheaf needs exactly one of --lattice, --model");
  IntersectionLattice lattice = a.model ? builtin_model(*a.model, std::nullopt).lattice()
                                        : json::lattice_from_json(load_json(*a.lattice));
  DivisorClass curve = json::parse_class(a.curve);
  lattice.check(curve);
  Integer e = parse_integer(a.e);
  if (e < 0) throw InputError("--e must be non-negative");
  DivisorClass h = a.polarization ? json::parse_class(*a.polarization) : curve;
  lattice.check(h);

  ChernCharacter ch = kernel_sheaf_character(lattice, curve, e);
  Rational delta = discriminant(lattice, ch);
  Rational mu = slope(lattice, ch, h);
  bool unstable = bogomolov_unstable(lattice, ch);

  Json j;
  j["curve"] = json::class_to_json(curve);
  j["degree"] = json::integer_to_json(e);
  j["ch"] = json::chern_to_json(ch);
  j["discriminant"] = to_string(delta);
  j["polarization"] = json::class_to_json(h);
  j["slope"] = to_string(mu);
  j["bogomolov_unstable"] = unstable;

  std::ostringstream t;
  t << "kernel sheaf of a degree " << to_string(e) << " pencil on C = " << curve.str() << "\n";
  t << "ch              " << ch_str(ch) << "\n";
  t << "discriminant    " << to_string(delta) << "\n";
  t << "slope (H = " << h.str() << ")  " << to_string(mu) << "\n";
  t << "unstable        " << (unstable ? "yes (discriminant > 0)" : "no (discriminant <= 0)") << "\n";
  sink.emit(out, j, t.str());
  return kOk;
}

// ---- destab -------------------------------------------------------------

struct DestabArgs {
  std::string model, curve, e, json;
  std::optional<std::string> lattice, effective_cone, ample_cone;
};

int run_destab(const CLI::App* cmd, const DestabArgs& a, std::ostream& out) {
  require_readable(a.lattice);
  require_readable(a.effective_cone);
  require_readable(a.ample_cone);
  Sink sink = make_sink(cmd, a.json);
  const std::size_t max_rank = max_rank_from_env();

  std::optional<SurfaceModel> model;
  std::optional<RationalCone> search;
  if (a.model == "generic") {
    if (!a.lattice || !a.effective_cone) throw InputError("--model generic needs --lattice and --effective-cone");
    IntersectionLattice lattice = json::lattice_from_json(load_json(*a.lattice));
    RationalCone effective = json::cone_from_json(lattice, load_json(*a.effective_cone), max_rank);
    RationalCone ample = a.ample_cone ? json::cone_from_json(lattice, load_json(*a.ample_cone), max_rank) : effective;
    model = SurfaceModel::generic(lattice, ample, effective, false, std::nullopt);
  } else {
    model = builtin_model(a.model, std::nullopt);
    if (a.lattice) {
      IntersectionLattice given = json::lattice_from_json(load_json(*a.lattice));
      if (given.gram_rows() != model->lattice().gram_rows()) {
        throw InputError("--lattice does not match the gram matrix of model " + a.model);
      }
    }
    if (a.ample_cone) throw InputError("--ample-cone is only used with --model generic");
    if (a.effective_cone) search = json::cone_from_json(model->lattice(), load_json(*a.effective_cone), max_rank);
  }

  DestabilizerQuery query(*model, json::parse_class(a.curve), parse_integer(a.e), search);
  DestabilizerCertificate cert = contradiction_certificate(query);

  std::ostringstream t;
  t << "curve " << query.curve().str() << " on " << model->name() << ", e = " << to_string(cert.degree) << "\n";
  t << "raw candidates      " << join(cert.candidates.raw) << "\n";
  t << "pencil-filtered     " << join(cert.candidates.pencil_filtered)
    << (cert.candidates.pencil_filter_applied ? "" : "  (filter not applied)") << "\n";
  std::string survivors;
  for (const auto& s : cert.survivors) {
    survivors += (survivors.empty() ? "" : " ") + s.cls.str() + "[D.C-e=" + to_string(s.residual_degree) + "]";
  }
  t << "survivors           " << (survivors.empty() ? "(none)" : survivors) << "\n";
  t << "residual-pruned     " << join(cert.residual_pruned) << "\n";
  if (cert.candidates.warning) t << "warning             " << *cert.candidates.warning << "\n";
  t << "verdict             "
    << (cert.verdict == Verdict::GonalityExceedsDegree ? "gon > " + to_string(cert.degree)
                                                        : std::string("candidates survive"))
    << "\n";
  t << "                    " << cert.statement << "\n";
  sink.emit(out, json::destab_certificate_to_json(cert), t.str());
  return kOk;
}

// ---- invariants ---------------------------------------------------------

struct InvariantsArgs {
  std::string model, json;
  std::optional<std::string> cls, degrees, rational_point, bielliptic;
  std::optional<std::string> lattice, ample_cone, effective_cone, very_ample, irregularity_zero;
};

int run_invariants(const CLI::App* cmd, const InvariantsArgs& a, std::ostream& out) {
  require_readable(a.lattice);
  require_readable(a.ample_cone);
  require_readable(a.effective_cone);
  Sink sink = make_sink(cmd, a.json);
  const std::size_t max_rank = max_rank_from_env();

  std::optional<CurveSpec> spec;
  if (a.model == "generic") {
    if (!a.lattice || !a.ample_cone) throw InputError("--model generic needs --lattice and --ample-cone");
    IntersectionLattice lattice = json::lattice_from_json(load_json(*a.lattice));
    RationalCone ample = json::cone_from_json(lattice, load_json(*a.ample_cone), max_rank);
    RationalCone effective =
        a.effective_cone ? json::cone_from_json(lattice, load_json(*a.effective_cone), max_rank) : ample;
    std::optional<DivisorClass> very_ample;
    if (a.very_ample) very_ample = json::parse_class(*a.very_ample);
    bool q0 = a.irregularity_zero && yes_no(*a.irregularity_zero);
    spec = CurveSpec{SurfaceModel::generic(lattice, ample, effective, q0, very_ample), {}, {}, {}};
  } else {
    SurfaceModel model = builtin_model(a.model, a.degrees);
    if (model.kind() == SurfaceKind::CompleteIntersection) {
      spec = CurveSpec::complete_intersection(model.ci_degrees());
    } else {
      spec = CurveSpec{model, {}, {}, {}};
    }
  }
  if (a.cls) {
    DivisorClass cls = json::parse_class(*a.cls);
    if (spec->model.kind() == SurfaceKind::CompleteIntersection && cls != spec->cls) {
      throw InputError("--class " + cls.str() + " disagrees with the complete intersection class " + spec->cls.str());
    }
    spec->cls = cls;
  } else if (spec->model.kind() != SurfaceKind::CompleteIntersection) {
    throw InputError("invariants needs --class");
  }
  spec->has_rational_point = tri_state(a.rational_point);
  spec->bielliptic = tri_state(a.bielliptic);

  BoundCertificate cert = certify(*spec);

  std::ostringstream t;
  t << "model           " << spec->model.name() << "\n";
  t << "class           " << spec->cls.str() << "\n";
  t << "gon             " << interval(cert.gon_lo, cert.gon_hi) << "\n";
  t << "a.irr           " << interval(cert.airr_lo, cert.airr_hi) << "\n";
  t << "exact           " << (cert.exact() ? "yes" : "no") << "\n";
  t << "a.irr = gon     " << (cert.airr_equals_gon ? "yes" : "not established") << "\n";
  t << "finiteness      "
    << (cert.finiteness_threshold ? "finitely many points of degree < " + to_string(*cert.finiteness_threshold)
                                  : std::string("none"))
    << "\n";
  t << "provenance\n";
  std::size_t width = 0;
  for (const auto& p : cert.provenance) width = std::max(width, p.bound.size());
  for (const auto& p : cert.provenance) {
    t << "  " << std::left << std::setw(static_cast<int>(width + 2)) << p.bound << p.ref << "\n";
  }
  if (!cert.notes.empty()) {
    t << "notes\n";
    for (const auto& n : cert.notes) t << "  " << n << "\n";
  }
  sink.emit(out, json::certificate_to_json(cert), t.str());
  return kOk;
}

}  // namespace

SurfaceModel builtin_model(const std::string& name, const std::optional<std::string>& degrees) {
  if (name == "plane") return SurfaceModel::plane();
  if (name == "p1p1") return SurfaceModel::p1xp1();
  if (name == "exp1") return SurfaceModel::exp1();
  if (name.rfind("rank1:", 0) == 0) return SurfaceModel::rank1(parse_integer(name.substr(6)));
  if (name.rfind("ci:", 0) == 0) return SurfaceModel::complete_intersection(parse_degree_list(name.substr(3)));
  if (name == "ci") {
    if (!degrees) throw InputError("--model ci needs --degrees, e.g. --degrees \"[9,10]\"");
    return SurfaceModel::complete_intersection(json::parse_class(*degrees).coords());
  }
  throw InputError("unknown model '" + name + "' (expected plane, p1p1, exp1, rank1:d, ci:d1,d2,... or generic)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds on gonality and arithmetic degree of irrationality of curves on surfaces",
               "lowdeg"};
  app.require_subcommand(1);
  const auto yes_no_check = CLI::IsMember({"yes", "no"});

  ExcArgs exc_args;
  auto* exc = app.add_subcommand("exc", "Enumerate exceptional classes 9 H.P > H.H in a cone");
  exc->add_option("--lattice", exc_args.lattice, "Lattice JSON file");
  exc->add_option("--cone", exc_args.cone, "Cone JSON file");
  exc->add_option("--p", exc_args.p, "Class P, e.g. \"[1,1]\"");
  exc->add_option("--model", exc_args.model, "Built-in model supplying lattice, ample cone and P");
  add_json_option(exc, exc_args.json);

  SheafArgs sheaf_args;
  auto* sheaf = app.add_subcommand("sheaf", "Numerical invariants of the rank-2 kernel sheaf");
  sheaf->add_option("--lattice", sheaf_args.lattice, "Lattice JSON file");
  sheaf->add_option("--model", sheaf_args.model, "Built-in model supplying the lattice");
  sheaf->add_option("--curve", sheaf_args.curve, "Curve class")->required();
  sheaf->add_option("--e", sheaf_args.e, "Pencil degree")->required();
  sheaf->add_option("--polarization", sheaf_args.polarization, "Class H for the slope (default: the curve)");
  add_json_option(sheaf, sheaf_args.json);

  DestabArgs destab_args;
  auto* destab = app.add_subcommand("destab", "Search for destabilizing line subbundles O(-D)");
  destab->add_option("--model", destab_args.model, "exp1, p1p1, plane, rank1:d or generic")->required();
  destab->add_option("--lattice", destab_args.lattice, "Lattice JSON file");
  destab->add_option("--curve", destab_args.curve, "Curve class")->required();
  destab->add_option("--e", destab_args.e, "Pencil degree")->required();
  destab->add_option("--effective-cone", destab_args.effective_cone, "Cone JSON file bounding the search");
  destab->add_option("--ample-cone", destab_args.ample_cone, "Ample cone JSON file (generic model)");
  add_json_option(destab, destab_args.json);

  InvariantsArgs inv_args;
  auto* inv = app.add_subcommand("invariants", "Certified bounds on gon and a.irr");
  inv->add_option("--model", inv_args.model, "plane, p1p1, exp1, rank1:d, ci:d1,d2,..., ci or generic")
      ->required();
  inv->add_option("--class", inv_args.cls, "Curve class");
  inv->add_option("--degrees", inv_args.degrees, "Complete intersection type, e.g. \"[9,10]\"");
  inv->add_option("--rational-point", inv_args.rational_point, "Plane curves: has a rational point")
      ->check(yes_no_check);
  inv->add_option("--bielliptic", inv_args.bielliptic, "Curve is bielliptic")->check(yes_no_check);
  inv->add_option("--lattice", inv_args.lattice, "Lattice JSON file (generic model)");
  inv->add_option("--ample-cone", inv_args.ample_cone, "Ample cone JSON file (generic model)");
  inv->add_option("--effective-cone", inv_args.effective_cone, "Effective cone JSON file (generic model)");
  inv->add_option("--very-ample", inv_args.very_ample, "Very ample class (generic model)");
  inv->add_option("--irregularity-zero", inv_args.irregularity_zero, "h^1(O_S) = 0 (generic model)")
      ->check(yes_no_check);
  add_json_option(inv, inv_args.json);

  SelftestOptions selftest_opts;
  auto* selftest = app.add_subcommand("selftest", "Check the library against brute-force oracles");
  selftest->add_flag("--inject-gram-perturbation", selftest_opts.perturb_gram,
                     "Negative control: perturb the built-in gram matrices");
  selftest->add_option("--decrement-level-bound", selftest_opts.level_bound_decrement,
                       "Negative control: scan exceptional sets below the proven level bound")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (*exc) return run_exc(exc, exc_args, out);
    if (*sheaf) return run_sheaf(sheaf, sheaf_args, out);
    if (*destab) return run_destab(destab, destab_args, out);
    if (*inv) return run_invariants(inv, inv_args, out);
    if (*selftest) return print_selftest(run_selftest(selftest_opts), out) ? kOk : kInternalError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Unsupported& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

}  // namespace lowdeg::cli
