#include "infalg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "infalg/algebra.hpp"
#include "infalg/atoms.hpp"
#include "infalg/duality.hpp"
#include "infalg/examples.hpp"
#include "infalg/io.hpp"

namespace infalg {

namespace {

struct Options {
  Index cap = kDefaultCap;
  std::optional<Index> cap_flag;
  std::string format = "text";
  std::string output;
  std::string path;
  std::string path_b;
  std::string map_path;
  bool lenient = false;
  bool with_identity = false;
  std::string kind;
  std::vector<Index> params;
  Index max_n = 0;
  Index spaces = 0;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int verify();
  int close();
  int dualize_cmd();
  int reconstruct_cmd();
  int roundtrip();
  int atoms_cmd();
  int classify_cmd();
  int gen();
  int check_hom();
  int enumerate();

 private:
  bool json() const { return o_.format == "json"; }
  void emit(const Json& doc);
  void report(const Json& doc) { out_ << print_json(doc); }
  static Json check_json(const Check& c);
  void check_line(const std::string& name, const Check& c);

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

void Runner::emit(const Json& doc) {
  if (o_.output.empty()) {
    out_ << print_json(doc);
    return;
  }
  std::ofstream file(o_.output);
  if (!file) throw FormatError(fmt::format("cannot write '{}'", o_.output));
  file << print_json(doc);
}

Json Runner::check_json(const Check& c) {
  Json j;
  j["pass"] = c.ok();
  if (!c.ok()) {
    j["message"] = c.message();
    j["witness"] = c.witness();
  }
  return j;
}

void Runner::check_line(const std::string& name, const Check& c) {
  if (c.ok())
    out_ << name << ": pass\n";
  else
    out_ << name << ": FAIL " << c.message() << " witness " << format_indices(c.witness()) << "\n";
}

int Runner::verify() {
  const InfoAlgebra a = parse_algebra(read_json_file(o_.path));
  const AxiomReport r = verify_axioms(a, o_.lenient);
  if (json()) {
    Json axioms = Json::object();
    for (const auto& [name, check] : r.entries()) axioms[name] = check_json(*check);
    Json doc;
    doc["axioms"] = std::move(axioms);
    doc["pass"] = r.ok();
    report(doc);
  } else {
    for (const auto& [name, check] : r.entries()) check_line(name, *check);
    out_ << "verdict: " << (r.ok() ? "pass" : "fail") << "\n";
  }
  return r.ok() ? 0 : 1;
}

int Runner::close() {
  const InfoAlgebra a = parse_algebra(read_json_file(o_.path));
  const AxiomReport r = verify_axioms(a, true);
  if (!r.ok()) {
    for (const auto& [name, check] : r.entries())
      if (!check->ok()) err_ << name << ": FAIL " << check->message() << "\n";
    return 1;
  }
  emit(algebra_to_json(close_extractors(a, o_.with_identity, o_.cap)));
  return 0;
}

int Runner::dualize_cmd() {
  emit(dual_to_json(dualize(parse_algebra(read_json_file(o_.path)))));
  return 0;
}

int Runner::reconstruct_cmd() {
  emit(algebra_to_json(reconstruct(parse_qspace(read_json_file(o_.path))).algebra()));
  return 0;
}

int Runner::roundtrip() {
  const Json doc = read_json_file(o_.path);
  Json r;
  Check iso;
  if (doc.is_object() && doc.contains("equivalences")) {
    const QSpace s = parse_qspace(doc);
    const SpaceRoundTrip t = round_trip_space(s);
    iso = t.iso;
    r["kind"] = "space";
    r["alpha"] = t.lambda.alpha;
    Json omega = Json::object();
    for (Index g = 0; g < t.lambda.omega.size(); ++g)
      omega[t.dual.space.eqs().label(g)] = s.eqs().label(t.lambda.omega[g]);
    r["omega"] = std::move(omega);
  } else {
    const InfoAlgebra a = parse_algebra(doc);
    const AlgebraRoundTrip t = round_trip_algebra(a);
    iso = t.iso;
    r["kind"] = "algebra";
    r["f"] = t.kappa.f;
    Json g = Json::object();
    for (Index e = 0; e < t.kappa.g.size(); ++e) g[a.label(e)] = t.reconstructed.algebra().label(t.kappa.g[e]);
    r["g"] = std::move(g);
  }
  if (json()) {
    r["iso"] = check_json(iso);
    report(r);
  } else {
    if (r["kind"] == "space") {
      out_ << "points: " << r["alpha"].dump() << "\n";
      out_ << "equivalences: " << r["omega"].dump() << "\n";
    } else {
      out_ << "elements: " << r["f"].dump() << "\n";
      out_ << "extractors: " << r["g"].dump() << "\n";
    }
    check_line("isomorphism", iso);
  }
  return iso.ok() ? 0 : 1;
}

int Runner::atoms_cmd() {
  const InfoAlgebra a = parse_algebra(read_json_file(o_.path));
  const auto at = atoms(a);
  if (json()) {
    Json doc;
    doc["atoms"] = at;
    Json names = Json::array();
    for (Index x : at) names.push_back(a.element_name(x));
    doc["names"] = std::move(names);
    report(doc);
  } else {
    std::vector<std::string> names;
    for (Index x : at) names.push_back(a.element_name(x));
    out_ << "atoms: " << fmt::format("{}", fmt::join(names, " ")) << "\n";
  }
  return 0;
}

int Runner::classify_cmd() {
  const InfoAlgebra a = parse_algebra(read_json_file(o_.path));
  const AtomReport r = classify(a);
  const char* headline = r.completely_atomistic ? "completely atomistic"
                         : r.atomistic          ? "atomistic"
                         : r.atomic             ? "atomic"
                                                : "not atomic";
  if (json()) {
    Json doc;
    doc["classification"] = headline;
    doc["atomic"] = r.atomic;
    doc["atomistic"] = r.atomistic;
    doc["completely_atomistic"] = r.completely_atomistic;
    if (r.unrealized) doc["unrealized"] = members(*r.unrealized);
    report(doc);
  } else {
    out_ << headline << "\n";
    out_ << "atomic: " << (r.atomic ? "yes" : "no") << "\n";
    out_ << "atomistic: " << (r.atomistic ? "yes" : "no") << "\n";
    out_ << "completely atomistic: " << (r.completely_atomistic ? "yes" : "no") << "\n";
    if (r.unrealized) {
      std::vector<std::string> names;
      for (Index i : members(*r.unrealized)) names.push_back(a.element_name(r.atoms[i]));
      out_ << "unrealized atom set: {" << fmt::format("{}", fmt::join(names, ",")) << "}\n";
    }
  }
  return 0;
}

int Runner::gen() {
  const auto& p = o_.params;
  if (o_.kind == "string") {
    if (p.size() != 2) throw FormatError("gen string needs k and N");
    emit(algebra_to_json(gen_string(p[0], p[1], o_.cap)));
  } else if (o_.kind == "multivariate") {
    if (p.empty()) throw FormatError("gen multivariate needs at least one domain size");
    emit(algebra_to_json(gen_multivariate(p, o_.cap).algebra()));
  } else if (o_.kind == "lattice-valued") {
    if (p.size() < 2) throw FormatError("gen lattice-valued needs a chain length and at least one domain size");
    if (p[0] < 2) throw FormatError("value chain needs at least two elements");
    std::vector<Index> domains(p.begin() + 1, p.end());
    emit(algebra_to_json(gen_lattice_valued(domains, FiniteLattice::chain(p[0]), o_.cap)));
  } else {
    throw FormatError(fmt::format("unknown generator '{}'", o_.kind));
  }
  return 0;
}

int Runner::check_hom() {
  const InfoAlgebra a = parse_algebra(read_json_file(o_.path));
  const InfoAlgebra b = parse_algebra(read_json_file(o_.path_b));
  const AlgebraMorphism m = parse_morphism(read_json_file(o_.map_path), a, b);
  const Check c = is_homomorphism(m, a, b);
  if (json()) {
    Json doc;
    doc["homomorphism"] = check_json(c);
    report(doc);
  } else {
    check_line("homomorphism", c);
  }
  return c.ok() ? 0 : 1;
}

int Runner::enumerate() {
  const auto algebras = enumerate_small_algebras(o_.max_n);
  std::vector<QSpace> spaces;
  if (o_.spaces > 0) spaces = enumerate_small_spaces(o_.spaces);
  if (json()) {
    Json doc;
    Json alg = Json::array();
    for (const auto& a : algebras) alg.push_back(algebra_to_json(a));
    doc["algebras"] = std::move(alg);
    Json sp = Json::array();
    for (const auto& s : spaces) sp.push_back(qspace_to_json(s));
    doc["spaces"] = std::move(sp);
    report(doc);
    return 0;
  }
  for (const auto& a : algebras) {
    std::vector<std::string> labels;
    for (const auto& e : a.extractors()) labels.push_back(e.label);
    out_ << fmt::format("algebra n={} extractors={}\n", a.size(), fmt::join(labels, ","));
  }
  for (const auto& s : spaces) {
    std::vector<std::string> eqs;
    for (Index t = 0; t < s.eqs().size(); ++t) eqs.push_back(to_string(s.eqs().member(t)));
    out_ << fmt::format("space n={} equivalences={}\n", s.size(), fmt::join(eqs, " "));
  }
  out_ << fmt::format("algebras: {}\n", algebras.size());
  if (o_.spaces > 0) out_ << fmt::format("spaces: {}\n", spaces.size());
  return 0;
}

std::optional<Index> env_cap() {
  const char* v = std::getenv("INFALG_CAP");
  if (!v) return std::nullopt;
  try {
    std::size_t used = 0;
    const long long n = std::stoll(v, &used);
    if (used != std::string(v).size() || n <= 0) throw std::invalid_argument(v);
    return static_cast<Index>(n);
  } catch (const std::exception&) {
    throw FormatError(fmt::format("INFALG_CAP must be a positive integer, got '{}'", v));
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite information algebras, their set representations and duals", "infalg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cap", o.cap_flag, "carrier size cap (default 4096, or INFALG_CAP)")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "check the extraction axioms");
  verify->add_option("file", o.path)->required();
  verify->add_flag("--lenient", o.lenient, "skip the composition-closure check");

  auto* close = app.add_subcommand("close", "close the extractors under composition");
  close->add_option("file", o.path)->required();
  close->add_flag("--with-identity", o.with_identity, "also add the identity map");
  close->add_option("-o,--output", o.output);

  auto* dualize = app.add_subcommand("dualize", "dual space of a distributive algebra");
  dualize->add_option("file", o.path)->required();
  dualize->add_option("-o,--output", o.output);

  auto* reconstruct = app.add_subcommand("reconstruct", "algebra of up-sets of a space");
  reconstruct->add_option("file", o.path)->required();
  reconstruct->add_option("-o,--output", o.output);

  auto* roundtrip = app.add_subcommand("roundtrip", "verify the duality round trip of an algebra or space");
  roundtrip->add_option("file", o.path)->required();

  auto* atoms = app.add_subcommand("atoms", "list the atoms");
  atoms->add_option("file", o.path)->required();

  auto* classify = app.add_subcommand("classify", "atomic / atomistic / completely atomistic");
  classify->add_option("file", o.path)->required();

  auto* gen = app.add_subcommand("gen", "generate an example algebra");
  gen->add_option("kind", o.kind, "string | multivariate | lattice-valued")
      ->required()
      ->check(CLI::IsMember({"string", "multivariate", "lattice-valued"}));
  gen->add_option("params", o.params,
                  "string: k N; multivariate: domain sizes; lattice-valued: chain length, domain sizes")
      ->required();
  gen->add_option("-o,--output", o.output);

  auto* hom = app.add_subcommand("check-hom", "check an algebra homomorphism");
  hom->add_option("source", o.path)->required();
  hom->add_option("target", o.path_b)->required();
  hom->add_option("map", o.map_path)->required();

  auto* en = app.add_subcommand("enumerate", "enumerate small distributive algebras and spaces");
  en->add_option("max_n", o.max_n)->required();
  en->add_option("--spaces", o.spaces, "also enumerate spaces up to this many points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (o.cap_flag)
      o.cap = *o.cap_flag;
    else if (auto c = env_cap())
      o.cap = *c;

    Runner r(o, out, err);
    if (*verify) return r.verify();
    if (*close) return r.close();
    if (*dualize) return r.dualize_cmd();
    if (*reconstruct) return r.reconstruct_cmd();
    if (*roundtrip) return r.roundtrip();
    if (*atoms) return r.atoms_cmd();
    if (*classify) return r.classify_cmd();
    if (*gen) return r.gen();
    if (*hom) return r.check_hom();
    if (*en) return r.enumerate();
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace infalg
