#include "tracts/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tracts/composition.hpp"
#include "tracts/diagram.hpp"
#include "tracts/errors.hpp"
#include "tracts/fixtures.hpp"
#include "tracts/fmatroid.hpp"
#include "tracts/hyperops.hpp"
#include "tracts/json_io.hpp"
#include "tracts/linalg.hpp"
#include "tracts/morphism.hpp"

namespace tracts {

namespace {

struct SourceOpts {
  std::string fixture, in_file, tract, matrix, circuits, ground, check;
};

void add_source_flags(CLI::App* cmd, SourceOpts& s) {
  cmd->add_option("--fixture", s.fixture, "fixture id (ids listed under 'repro')");
  cmd->add_option("--in", s.in_file, "path of a matroid json document");
  cmd->add_option("--tract", s.tract, "tract name for --matrix or --circuits");
  cmd->add_option("--matrix", s.matrix, "matrix literal whose rows span the subspace");
  cmd->add_option("--circuits", s.circuits, "semicolon-separated circuit vector literals");
  cmd->add_option("--ground", s.ground, "comma-separated ground labels, default 1..n");
  cmd->add_option("--check", s.check, "axiom level verified on construction")
      ->check(CLI::IsMember({"unchecked", "weak", "strong"}));
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (std::string& s : out) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
  }
  out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
  return out;
}

// entry count of "(a, b, c)" counting only depth-one commas
size_t literal_arity(const std::string& text) {
  int depth = 0;
  size_t commas = 0;
  bool content = false;
  for (char c : text) {
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == ',' && depth == 1) ++commas;
    else if (depth >= 1 && c != ' ') content = true;
  }
  if (!content) throw ValidationError("empty vector literal '" + text + "'");
  return commas + 1;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

AxiomMode mode_of(const std::string& s) {
  if (s == "weak") return AxiomMode::Weak;
  if (s == "strong") return AxiomMode::Strong;
  return AxiomMode::Unchecked;
}

TractId tract_of(const std::string& name) {
  try {
    return parse_tract(name);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

FVector vector_of(const FMatroid& m, const std::string& text) {
  try {
    return parse_fvector(m.tract, m.ground, text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

GroundSet ground_of(const std::string& labels, size_t n) {
  if (labels.empty()) return numbered_ground(static_cast<int>(n));
  GroundSet g = make_ground(split_list(labels, ','));
  if (g.size() != n)
    throw ValidationError("ground has " + std::to_string(g.size()) + " labels for " +
                          std::to_string(n) + " coordinates");
  return g;
}

FMatroid load_source(const SourceOpts& s, size_t max_enum) {
  int picked = (!s.fixture.empty() ? 1 : 0) + (!s.in_file.empty() ? 1 : 0) +
               (!s.tract.empty() ? 1 : 0);
  if (picked != 1)
    throw ValidationError(
        "choose one matroid source: --fixture, --in, or --tract with --matrix/--circuits");

  FMatroid m = [&] {
    if (!s.fixture.empty()) return load_fixture(s.fixture).matroid;
    if (!s.in_file.empty()) return fmatroid_from_json(parse_json(read_file(s.in_file)));
    TractId t = tract_of(s.tract);
    if (!s.matrix.empty() == !s.circuits.empty())
      throw ValidationError("--tract needs exactly one of --matrix or --circuits");
    if (!s.matrix.empty()) {
      FieldMatrix a = [&] {
        try {
          return parse_matrix(t, s.matrix);
        } catch (const std::invalid_argument& e) {
          throw ValidationError(e.what());
        }
      }();
      return from_subspace(a, ground_of(s.ground, a.cols));
    }
    std::vector<std::string> literals = split_list(s.circuits, ';');
    if (literals.empty()) throw ValidationError("--circuits lists no vector literals");
    GroundSet g = ground_of(s.ground, literal_arity(literals.front()));
    std::vector<FVector> reps;
    for (const std::string& lit : literals) {
      try {
        reps.push_back(parse_fvector(t, g, lit));
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
      }
    }
    return from_circuit_reps(t, g, std::move(reps));
  }();

  if (!s.check.empty() && mode_of(s.check) != m.checked_mode) {
    FMatroidOptions opts;
    opts.check_mode = mode_of(s.check);
    opts.max_enum = max_enum;
    m = from_circuit_reps(m.tract, m.ground, m.circuit_reps, opts);
  }
  return m;
}

// the axiom checker must run on sets that fail construction, so this parses
// representatives without deriving the rest of the matroid
struct RawReps {
  TractId tract;
  GroundSet ground;
  std::vector<FVector> reps;
};

RawReps load_reps(const SourceOpts& s, size_t max_enum) {
  if (!s.tract.empty() && !s.circuits.empty() && s.fixture.empty() && s.in_file.empty()) {
    TractId t = tract_of(s.tract);
    std::vector<std::string> literals = split_list(s.circuits, ';');
    if (literals.empty()) throw ValidationError("--circuits lists no vector literals");
    GroundSet g = ground_of(s.ground, literal_arity(literals.front()));
    std::vector<FVector> reps;
    for (const std::string& lit : literals) {
      try {
        reps.push_back(parse_fvector(t, g, lit));
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
      }
    }
    return {t, g, std::move(reps)};
  }
  FMatroid m = load_source(s, max_enum);
  return {m.tract, m.ground, m.circuit_reps};
}

Json verdict_json(const PropertyVerdict& v) {
  Json j;
  j["status"] = v.proven_p() ? "proven" : v.refuted_p() ? "refuted" : "unknown";
  j["witness"] = v.witness;
  j["search_bound"] = v.search_bound;
  return j;
}

void text_verdict(const Json& v, std::ostream& out) {
  std::string st = v["status"].get<std::string>();
  std::string witness = v["witness"].get<std::string>();
  if (st == "proven")
    out << "Proven" << (witness.empty() ? "" : " (" + witness + ")") << "\n";
  else if (st == "refuted")
    out << "Refuted: " << witness << "\n";
  else
    out << "Unknown: " << v["search_bound"].get<std::string>() << "\n";
}

void text_matroid(const Json& doc, std::ostream& out) {
  out << "tract: " << doc["tract"].get<std::string>() << "\n";
  out << "ground:";
  for (const Json& l : doc["ground"]) out << " " << l.get<std::string>();
  out << "\n";
  out << "checked: " << doc["checked"].get<std::string>() << "\n";
  out << "circuits:\n";
  for (const Json& c : doc["circuits"]) out << "  " << c.get<std::string>() << "\n";
}

void text_reps(const Json& doc, const char* key, std::ostream& out) {
  for (const Json& c : doc[key]) out << c.get<std::string>() << "\n";
}

std::string flat_text(const Json& flat) {
  std::string line = "{";
  bool first = true;
  for (const Json& l : flat) {
    if (!first) line += ", ";
    line += l.get<std::string>();
    first = false;
  }
  return line + "}";
}

Json table_json(const TractId& t) {
  Json j;
  j["tract"] = tract_name(t);
  std::vector<Scalar> carrier = carrier_elements(t);
  Json names = Json::array();
  for (const Scalar& a : carrier) names.push_back(scalar_format(a));
  j["carrier"] = std::move(names);
  Json mul_rows = Json::array();
  for (const Scalar& a : carrier) {
    Json row = Json::array();
    for (const Scalar& b : carrier) row.push_back(scalar_format(mul(a, b)));
    mul_rows.push_back(std::move(row));
  }
  j["mul"] = std::move(mul_rows);
  Json sums = Json::array();
  for (const Scalar& a : carrier) {
    Json row = Json::array();
    for (const Scalar& b : carrier) {
      Json cell = Json::array();
      for (const Scalar& c : carrier)
        if (in_hypersum(c, {a, b})) cell.push_back(scalar_format(c));
      row.push_back(std::move(cell));
    }
    sums.push_back(std::move(row));
  }
  j["hypersum"] = std::move(sums);
  return j;
}

void text_tables(const Json& doc, std::ostream& out) {
  bool first = true;
  for (const Json& tbl : doc["tables"]) {
    if (!first) out << "\n";
    first = false;
    const Json& carrier = tbl["carrier"];
    out << "tract " << tbl["tract"].get<std::string>() << " (" << carrier.size()
        << " elements)\n";
    out << "carrier:";
    for (const Json& c : carrier) out << " " << c.get<std::string>();
    out << "\n";
    out << "mul:\n";
    for (size_t a = 0; a < carrier.size(); ++a)
      for (size_t b = 0; b < carrier.size(); ++b)
        out << "  " << carrier[a].get<std::string>() << " * " << carrier[b].get<std::string>()
            << " = " << tbl["mul"][a][b].get<std::string>() << "\n";
    out << "hypersum:\n";
    for (size_t a = 0; a < carrier.size(); ++a)
      for (size_t b = 0; b < carrier.size(); ++b) {
        out << "  " << carrier[a].get<std::string>() << " (+) "
            << carrier[b].get<std::string>() << " = {";
        const Json& cell = tbl["hypersum"][a][b];
        for (size_t k = 0; k < cell.size(); ++k)
          out << (k ? ", " : "") << cell[k].get<std::string>();
        out << "}\n";
      }
  }
}

Json reps_json(const FMatroid& m, const char* key, const std::vector<FVector>& reps) {
  Json j;
  j["tract"] = tract_name(m.tract);
  j["ground"] = m.ground.labels;
  Json arr = Json::array();
  for (const FVector& r : reps) arr.push_back(format_fvector(r));
  j[key] = std::move(arr);
  return j;
}

Json report_json(const FixtureReport& r) {
  Json j;
  j["id"] = r.id;
  j["description"] = r.description;
  Json facts = Json::array();
  for (const FixtureFact& f : r.facts) {
    Json fj;
    fj["name"] = f.name;
    fj["pass"] = f.pass;
    fj["detail"] = f.detail;
    facts.push_back(std::move(fj));
  }
  j["facts"] = std::move(facts);
  j["passed"] = r.all_passed();
  return j;
}

void text_repro(const Json& doc, std::ostream& out) {
  for (const Json& r : doc["fixtures"]) {
    out << "fixture " << r["id"].get<std::string>() << ": "
        << r["description"].get<std::string>() << "\n";
    for (const Json& f : r["facts"]) {
      out << (f["pass"].get<bool>() ? "  pass  " : "  FAIL  ") << f["name"].get<std::string>();
      std::string detail = f["detail"].get<std::string>();
      if (!detail.empty()) out << " [" << detail << "]";
      out << "\n";
    }
  }
  size_t total = doc["fixtures"].size();
  out << (doc["passed"].get<bool>() ? "all " + std::to_string(total) + " fixtures passed"
                                    : "fixture facts FAILED")
      << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact matroids over tracts and hyperfields"};
  app.require_subcommand(0, 1);
  std::string format = "text";
  std::size_t max_enum = 1000000;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-enum", max_enum, "budget for enumerations and searches");

  CLI::App* c_table = app.add_subcommand("tract", "tract-level queries");
  std::vector<std::string> table_ids;
  CLI::App* c_table_table =
      c_table->add_subcommand("table", "operation tables of finite tracts");
  c_table_table->add_option("ids", table_ids, "tract names, default krasner sign fp:2 fp:3");
  c_table_table->fallthrough();
  c_table->fallthrough();

  CLI::App* c_matroid = app.add_subcommand("matroid", "matroid construction");
  SourceOpts s_matrix;
  CLI::App* c_from_matrix =
      c_matroid->add_subcommand("from-matrix", "matroid of the row space of a matrix");
  add_source_flags(c_from_matrix, s_matrix);
  c_from_matrix->fallthrough();
  c_matroid->fallthrough();

  SourceOpts s_circ;
  CLI::App* c_circuits = app.add_subcommand("circuits", "circuit orbit representatives");
  add_source_flags(c_circuits, s_circ);
  c_circuits->fallthrough();

  SourceOpts s_cocirc;
  CLI::App* c_cocircuits = app.add_subcommand("cocircuits", "cocircuit orbit representatives");
  add_source_flags(c_cocircuits, s_cocirc);
  c_cocircuits->fallthrough();

  SourceOpts s_rref;
  std::string rref_basis;
  CLI::App* c_rref = app.add_subcommand("rref", "reduced cocircuit rows for a basis");
  add_source_flags(c_rref, s_rref);
  c_rref->add_option("--basis", rref_basis, "comma-separated basis labels")->required();
  c_rref->fallthrough();

  SourceOpts s_dual;
  CLI::App* c_dual = app.add_subcommand("dual", "dual matroid");
  add_source_flags(c_dual, s_dual);
  c_dual->fallthrough();

  SourceOpts s_member;
  std::string member_cov, member_vec;
  CLI::App* c_member = app.add_subcommand("member", "covector or vector membership");
  add_source_flags(c_member, s_member);
  c_member->add_option("--covector", member_cov, "vector literal to test as a covector");
  c_member->add_option("--vector", member_vec, "vector literal to test as a vector");
  c_member->fallthrough();

  SourceOpts s_delete;
  std::vector<std::string> delete_labels;
  CLI::App* c_delete = app.add_subcommand("delete", "delete ground elements");
  add_source_flags(c_delete, s_delete);
  c_delete->add_option("labels", delete_labels, "ground labels to delete")->required();
  c_delete->fallthrough();

  SourceOpts s_contract;
  std::vector<std::string> contract_labels;
  CLI::App* c_contract = app.add_subcommand("contract", "contract ground elements");
  add_source_flags(c_contract, s_contract);
  c_contract->add_option("labels", contract_labels, "ground labels to contract")->required();
  c_contract->fallthrough();

  SourceOpts s_push;
  std::string push_morphism;
  CLI::App* c_push = app.add_subcommand("push", "pushforward along a tract morphism");
  add_source_flags(c_push, s_push);
  c_push
      ->add_option("--morphism", push_morphism,
                   "kappa, sign, ph, abs-triangle, sign-tr, ph-tc, abs-tc, include-rc")
      ->required();
  c_push->fallthrough();

  SourceOpts s_axioms;
  bool ax_strong = false, ax_weak = false;
  CLI::App* c_axioms = app.add_subcommand("axioms", "verify the circuit axioms");
  add_source_flags(c_axioms, s_axioms);
  c_axioms->add_flag("--strong", ax_strong, "modular elimination over all pairs");
  c_axioms->add_flag("--weak", ax_weak, "plain elimination only");
  c_axioms->fallthrough();

  SourceOpts s_props;
  bool p_weak = false, p_elim = false, p_add = false;
  std::string props_x, props_y, props_e, props_alpha;
  CLI::App* c_props = app.add_subcommand("props", "covector-set properties on a pair");
  add_source_flags(c_props, s_props);
  c_props->add_flag("--weak-closure", p_weak, "zero stays attainable coordinatewise");
  c_props->add_flag("--elim", p_elim, "covector elimination at a coordinate");
  c_props->add_flag("--add-closure", p_add, "full hypersum closure");
  c_props->add_option("--x", props_x, "first covector literal")->required();
  c_props->add_option("--y", props_y, "second covector literal")->required();
  c_props->add_option("--e", props_e, "coordinate label for --elim");
  c_props->add_option("--alpha", props_alpha, "scalar literal for --add-closure");
  c_props->fallthrough();

  SourceOpts s_compose;
  std::string compose_op, compose_x, compose_y;
  CLI::App* c_compose = app.add_subcommand("compose", "compose two covectors");
  add_source_flags(c_compose, s_compose);
  c_compose->add_option("--op", compose_op, "composition operation")
      ->check(CLI::IsMember({"inflation", "max", "epsilon"}))
      ->required();
  c_compose->add_option("--x", compose_x, "first covector literal")->required();
  c_compose->add_option("--y", compose_y, "second covector literal")->required();
  c_compose->fallthrough();

  SourceOpts s_flats;
  CLI::App* c_flats = app.add_subcommand("flats", "zero sets of covectors");
  add_source_flags(c_flats, s_flats);
  c_flats->fallthrough();

  std::string repro_id;
  CLI::App* c_repro = app.add_subcommand("repro", "re-run fixture facts");
  c_repro->add_option("id", repro_id, "fixture id or 'all'")->required();
  c_repro->fallthrough();

  SourceOpts s_diagram;
  std::string diagram_path;
  std::vector<std::string> diagram_vecs;
  CLI::App* c_diagram = app.add_subcommand("diagram", "phase diagram as an svg file");
  add_source_flags(c_diagram, s_diagram);
  c_diagram->add_option("--svg", diagram_path, "output path")->required();
  c_diagram->add_option("--vec", diagram_vecs,
                        "vector literals to draw, default the cocircuit representatives");
  c_diagram->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (app.get_subcommands().empty()) {
    err << app.help();
    return 2;
  }

  // phase one interprets every input into a closed plan; phase two runs it.
  // Interpretation failures are usage errors, execution failures are
  // mathematical errors.
  std::function<Json()> plan;
  std::function<void(const Json&, std::ostream&)> texter;
  int exit_status = 0;

  try {
    if (c_table_table->parsed()) {
      std::vector<std::string> ids = table_ids;
      if (ids.empty()) ids = {"krasner", "sign", "fp:2", "fp:3"};
      std::vector<TractId> tracts;
      for (const std::string& id : ids) {
        TractId t = tract_of(id);
        if (!tract_finite(t))
          throw ValidationError("tract '" + id + "' is infinite; tables need a finite tract");
        tracts.push_back(t);
      }
      plan = [tracts] {
        Json doc;
        Json tables = Json::array();
        for (const TractId& t : tracts) tables.push_back(table_json(t));
        doc["tables"] = std::move(tables);
        return doc;
      };
      texter = text_tables;
    } else if (c_table->parsed()) {
      throw ValidationError("the 'tract' command needs a subcommand, try 'tract table'");
    } else if (c_from_matrix->parsed()) {
      if (s_matrix.matrix.empty() || !s_matrix.fixture.empty() || !s_matrix.in_file.empty())
        throw ValidationError("'matroid from-matrix' needs --tract and --matrix");
      FMatroid m = load_source(s_matrix, max_enum);
      plan = [m] { return fmatroid_to_json(m); };
      texter = text_matroid;
    } else if (c_matroid->parsed()) {
      throw ValidationError("the 'matroid' command needs a subcommand, try 'matroid from-matrix'");
    } else if (c_circuits->parsed()) {
      FMatroid m = load_source(s_circ, max_enum);
      plan = [m] { return reps_json(m, "circuits", m.circuit_reps); };
      texter = [](const Json& doc, std::ostream& o) { text_reps(doc, "circuits", o); };
    } else if (c_cocircuits->parsed()) {
      FMatroid m = load_source(s_cocirc, max_enum);
      plan = [m] { return reps_json(m, "cocircuits", m.cocircuit_reps); };
      texter = [](const Json& doc, std::ostream& o) { text_reps(doc, "cocircuits", o); };
    } else if (c_rref->parsed()) {
      FMatroid m = load_source(s_rref, max_enum);
      std::vector<std::string> labels = split_list(rref_basis, ',');
      for (const std::string& l : labels)
        if (!m.ground.has(l)) throw ValidationError("unknown ground label: " + l);
      std::set<std::string> basis(labels.begin(), labels.end());
      plan = [m, basis] {
        const Rref& r = cocircuit_rref(m, basis);
        Json doc;
        Json b = Json::array();
        for (const std::string& l : m.ground.labels)
          if (basis.count(l)) b.push_back(l);
        doc["basis"] = std::move(b);
        Json rows = Json::array();
        for (const FVector& row : r.rows) rows.push_back(format_fvector(row));
        doc["rows"] = std::move(rows);
        return doc;
      };
      texter = [](const Json& doc, std::ostream& o) {
        o << "basis:";
        for (const Json& l : doc["basis"]) o << " " << l.get<std::string>();
        o << "\n";
        for (const Json& r : doc["rows"]) o << r.get<std::string>() << "\n";
      };
    } else if (c_dual->parsed()) {
      FMatroid m = load_source(s_dual, max_enum);
      plan = [m] { return fmatroid_to_json(dual(m)); };
      texter = text_matroid;
    } else if (c_member->parsed()) {
      FMatroid m = load_source(s_member, max_enum);
      if (member_cov.empty() == member_vec.empty())
        throw ValidationError("'member' needs exactly one of --covector or --vector");
      bool covector_query = !member_cov.empty();
      FVector x = vector_of(m, covector_query ? member_cov : member_vec);
      plan = [m, x, covector_query] {
        Json doc;
        doc["query"] = covector_query ? "covector" : "vector";
        doc["element"] = format_fvector(x);
        doc["member"] = covector_query ? is_covector(m, x) : is_vector(m, x);
        return doc;
      };
      texter = [](const Json& doc, std::ostream& o) {
        o << doc["element"].get<std::string>() << " is "
          << (doc["member"].get<bool>() ? "a " : "not a ") << doc["query"].get<std::string>()
          << "\n";
      };
    } else if (c_delete->parsed() || c_contract->parsed()) {
      bool deleting = c_delete->parsed();
      FMatroid m = load_source(deleting ? s_delete : s_contract, max_enum);
      std::vector<std::string> raw = deleting ? delete_labels : contract_labels;
      std::set<std::string> labels;
      for (const std::string& chunk : raw)
        for (const std::string& l : split_list(chunk, ',')) {
          if (!m.ground.has(l)) throw ValidationError("unknown ground label: " + l);
          labels.insert(l);
        }
      plan = [m, labels, deleting] {
        return fmatroid_to_json(deleting ? delete_elements(m, labels) : contract(m, labels));
      };
      texter = text_matroid;
    } else if (c_push->parsed()) {
      FMatroid m = load_source(s_push, max_enum);
      Morphism f = [&] {
        try {
          return parse_morphism(push_morphism, m.tract);
        } catch (const std::invalid_argument& e) {
          throw ValidationError(e.what());
        }
      }();
      if (!(f.source == m.tract))
        throw ValidationError("morphism '" + push_morphism + "' starts at tract '" +
                              tract_name(f.source) + "', the matroid lives over '" +
                              tract_name(m.tract) + "'");
      plan = [m, f] { return fmatroid_to_json(pushforward(m, f)); };
      texter = text_matroid;
    } else if (c_axioms->parsed()) {
      if (ax_strong && ax_weak)
        throw ValidationError("'axioms' takes at most one of --strong or --weak");
      AxiomMode mode = ax_weak ? AxiomMode::Weak : AxiomMode::Strong;
      RawReps raw = load_reps(s_axioms, max_enum);
      plan = [raw, mode, max_enum] {
        Json doc =
            verdict_json(check_circuit_axioms(raw.tract, raw.ground, raw.reps, mode, max_enum));
        doc["mode"] = to_string(mode);
        return doc;
      };
      texter = text_verdict;
    } else if (c_props->parsed()) {
      if (p_weak + p_elim + p_add != 1)
        throw ValidationError(
            "'props' needs exactly one of --weak-closure, --elim, --add-closure");
      FMatroid m = load_source(s_props, max_enum);
      VectorProperty which = p_weak   ? VectorProperty::WeakClosure
                             : p_elim ? VectorProperty::Elimination
                                      : VectorProperty::AdditiveClosure;
      FVector x = vector_of(m, props_x);
      FVector y = vector_of(m, props_y);
      std::optional<std::string> e;
      if (!props_e.empty()) {
        if (!m.ground.has(props_e)) throw ValidationError("unknown ground label: " + props_e);
        e = props_e;
      }
      std::optional<Scalar> alpha;
      if (!props_alpha.empty()) {
        try {
          alpha = scalar_parse(m.tract, props_alpha);
        } catch (const std::invalid_argument& ex) {
          throw ValidationError(ex.what());
        }
      }
      const char* prop_name = p_weak ? "weak-closure" : p_elim ? "elim" : "add-closure";
      plan = [m, which, x, y, e, alpha, max_enum, prop_name] {
        Json doc = verdict_json(property_check(m, which, x, y, e, alpha, max_enum));
        doc["property"] = prop_name;
        return doc;
      };
      texter = text_verdict;
    } else if (c_compose->parsed()) {
      FMatroid m = load_source(s_compose, max_enum);
      FVector x = vector_of(m, compose_x);
      FVector y = vector_of(m, compose_y);
      std::string op = compose_op;
      plan = [m, x, y, op] {
        Json doc;
        doc["op"] = op;
        if (op == "epsilon") {
          std::optional<Rat> eps = epsilon_threshold(x, y, m.circuit_reps);
          doc["threshold"] = eps ? eps->str() : "none";
          Json ws = Json::array();
          for (const FVector& w : compose_epsilon(x, y, m.circuit_reps))
            ws.push_back(format_fvector(w));
          doc["witnesses"] = std::move(ws);
          return doc;
        }
        CompositionKind kind =
            op == "inflation" ? CompositionKind::Inflation : CompositionKind::MaxMagnitude;
        if (!composition_applicable(kind, m.tract))
          throw UnsupportedTractError("composition '" + op + "' is not known for tract '" +
                                      tract_name(m.tract) + "'");
        FVector z = kind == CompositionKind::Inflation ? compose_inflation(x, y)
                                                       : compose_max(x, y);
        doc["result"] = format_fvector(z);
        return doc;
      };
      texter = [](const Json& doc, std::ostream& o) {
        if (doc.contains("result")) {
          o << doc["result"].get<std::string>() << "\n";
          return;
        }
        o << "threshold: " << doc["threshold"].get<std::string>() << "\n";
        for (const Json& w : doc["witnesses"]) o << w.get<std::string>() << "\n";
      };
    } else if (c_flats->parsed()) {
      FMatroid m = load_source(s_flats, max_enum);
      plan = [m, max_enum] {
        Json doc;
        Json fl = Json::array();
        for (const std::set<std::string>& f : flats_from_covectors(m, max_enum)) {
          Json one = Json::array();
          for (const std::string& l : m.ground.labels)
            if (f.count(l)) one.push_back(l);
          fl.push_back(std::move(one));
        }
        doc["flats"] = std::move(fl);
        return doc;
      };
      texter = [](const Json& doc, std::ostream& o) {
        for (const Json& f : doc["flats"]) o << flat_text(f) << "\n";
      };
    } else if (c_repro->parsed()) {
      if (repro_id != "all" && !is_fixture_id(repro_id))
        throw ValidationError("unknown fixture id '" + repro_id + "'");
      std::string id = repro_id;
      plan = [id, &exit_status] {
        std::vector<FixtureReport> reports =
            id == "all" ? run_all_fixtures() : std::vector<FixtureReport>{run_fixture(id)};
        Json doc;
        Json arr = Json::array();
        bool all = true;
        for (const FixtureReport& r : reports) {
          all = all && r.all_passed();
          arr.push_back(report_json(r));
        }
        doc["fixtures"] = std::move(arr);
        doc["passed"] = all;
        if (!all) exit_status = 1;
        return doc;
      };
      texter = text_repro;
    } else if (c_diagram->parsed()) {
      FMatroid m = load_source(s_diagram, max_enum);
      std::vector<FVector> vecs;
      if (diagram_vecs.empty())
        vecs = m.cocircuit_reps;
      else
        for (const std::string& lit : diagram_vecs) vecs.push_back(vector_of(m, lit));
      std::string path = diagram_path;
      plan = [vecs, path] {
        emit_phase_diagram(vecs, path);
        Json doc;
        doc["path"] = path;
        doc["circles"] = vecs.size();
        return doc;
      };
      texter = [](const Json& doc, std::ostream& o) {
        o << "wrote " << doc["path"].get<std::string>() << ": " << doc["circles"].get<size_t>()
          << " circles\n";
      };
    } else {
      err << app.help();
      return 2;
    }
  } catch (const TractError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }

  try {
    Json result = plan();
    if (format == "json")
      out << dump_json(result);
    else
      texter(result, out);
    return exit_status;
  } catch (const TractError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tracts
