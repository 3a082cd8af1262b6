#include "cspar/json_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cspar/cover.hpp"
#include "json.hpp"

namespace cspar::io {

namespace {

using ojson = nlohmann::ordered_json;

ojson parse_text(const std::string& text) {
  ojson doc = ojson::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) fail(errc::parse_error, "malformed JSON");
  return doc;
}

void expect_keys(const ojson& obj, const char* what,
                 std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object())
    fail(errc::parse_error, std::string(what) + " must be a JSON object");
  for (const char* key : required)
    if (!obj.contains(key))
      fail(errc::parse_error, std::string(what) + " lacks key \"" + key + "\"");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* k : required)
      if (key == k) known = true;
    for (const char* k : optional)
      if (key == k) known = true;
    if (!known)
      fail(errc::parse_error,
           std::string(what) + " has unknown key \"" + key + "\"");
  }
}

int as_int(const ojson& v, const char* what) {
  if (!v.is_number_integer())
    fail(errc::parse_error, std::string(what) + " must be an integer");
  return v.get<int>();
}

double as_number(const ojson& v, const char* what) {
  if (!v.is_number())
    fail(errc::parse_error, std::string(what) + " must be a number");
  return v.get<double>();
}

const ojson& as_array(const ojson& v, const char* what) {
  if (!v.is_array())
    fail(errc::parse_error, std::string(what) + " must be an array");
  return v;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write " + path.string());
  out << text;
}

KaryPredicate predicate_from(const ojson& doc) {
  expect_keys(doc, "predicate", {"arity", "domains", "support"});
  const int arity = as_int(doc["arity"], "arity");
  std::vector<int> domains;
  for (const auto& d : as_array(doc["domains"], "domains"))
    domains.push_back(as_int(d, "domain size"));
  if (arity != static_cast<int>(domains.size()))
    fail(errc::parse_error, "arity disagrees with the domains array");
  std::vector<Tuple> support;
  for (const auto& row : as_array(doc["support"], "support")) {
    Tuple t;
    for (const auto& x : as_array(row, "support tuple"))
      t.push_back(as_int(x, "support label"));
    support.push_back(std::move(t));
  }
  return KaryPredicate(std::move(domains), support);
}

ojson predicate_doc(const KaryPredicate& p) {
  ojson doc;
  doc["arity"] = p.arity();
  doc["domains"] = p.domain_sizes();
  ojson support = ojson::array();
  for (const Tuple& t : p.sorted_support()) support.push_back(t);
  doc["support"] = std::move(support);
  return doc;
}

const char* verify_status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::exhaustive_pass: return "exhaustive-pass";
    case VerifyStatus::exhaustive_fail: return "exhaustive-fail";
    case VerifyStatus::unverified: return "unverified";
  }
  return "unverified";
}

VerifyStatus verify_status_from(const std::string& name) {
  if (name == "exhaustive-pass") return VerifyStatus::exhaustive_pass;
  if (name == "exhaustive-fail") return VerifyStatus::exhaustive_fail;
  if (name == "unverified") return VerifyStatus::unverified;
  fail(errc::parse_error, "unknown verification status \"" + name + "\"");
}

ojson report_doc(const SparsifierReport& r) {
  ojson doc;
  doc["epsilon"] = r.epsilon;
  doc["seed"] = r.seed;
  doc["retained"] = r.retained;
  doc["new_weights"] = r.new_weights;
  doc["verified"] = verify_status_name(r.verified);
  doc["oversampling_rounds"] = r.oversampling_rounds;
  return doc;
}

SparsifierReport report_from(const ojson& doc) {
  expect_keys(doc, "report",
              {"epsilon", "seed", "retained", "new_weights", "verified",
               "oversampling_rounds"});
  SparsifierReport r;
  r.epsilon = as_number(doc["epsilon"], "epsilon");
  if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
    fail(errc::parse_error, "seed must be an integer");
  r.seed = doc["seed"].get<std::uint64_t>();
  for (const auto& v : as_array(doc["retained"], "retained"))
    r.retained.push_back(as_int(v, "retained index"));
  for (const auto& v : as_array(doc["new_weights"], "new_weights"))
    r.new_weights.push_back(as_number(v, "weight"));
  if (!doc["verified"].is_string())
    fail(errc::parse_error, "verified must be a string");
  r.verified = verify_status_from(doc["verified"].get<std::string>());
  r.oversampling_rounds = as_int(doc["oversampling_rounds"], "oversampling_rounds");
  return r;
}

InstanceDocument instance_from(const ojson& doc, const std::filesystem::path& base_dir) {
  expect_keys(doc, "instance",
              {"variables", "domains", "predicate", "constraints"}, {"report"});
  std::vector<std::string> variables;
  std::unordered_map<std::string, int> index_of;
  for (const auto& v : as_array(doc["variables"], "variables")) {
    if (!v.is_string()) fail(errc::parse_error, "variable names must be strings");
    auto name = v.get<std::string>();
    if (!index_of.emplace(name, static_cast<int>(variables.size())).second)
      fail(errc::parse_error, "duplicate variable name \"" + name + "\"");
    variables.push_back(std::move(name));
  }
  std::vector<int> domains;
  for (const auto& d : as_array(doc["domains"], "domains"))
    domains.push_back(as_int(d, "domain size"));

  KaryPredicate predicate = [&] {
    const auto& p = doc["predicate"];
    if (p.is_string()) {
      const std::filesystem::path ref = p.get<std::string>();
      const auto resolved = ref.is_absolute() || base_dir.empty() ? ref : base_dir / ref;
      return predicate_from(parse_text(slurp(resolved)));
    }
    return predicate_from(p);
  }();

  std::vector<Constraint> constraints;
  for (const auto& c : as_array(doc["constraints"], "constraints")) {
    expect_keys(c, "constraint", {"scope", "weight"});
    Constraint out;
    for (const auto& v : as_array(c["scope"], "scope")) {
      if (!v.is_string()) fail(errc::parse_error, "scope entries must be variable names");
      auto it = index_of.find(v.get<std::string>());
      if (it == index_of.end())
        fail(errc::parse_error, "scope names unknown variable \"" +
                                    v.get<std::string>() + "\"");
      out.scope.push_back(it->second);
    }
    out.weight = as_number(c["weight"], "weight");
    constraints.push_back(std::move(out));
  }

  InstanceDocument result{CspInstance(std::move(variables), std::move(domains),
                                      std::move(predicate), std::move(constraints)),
                          std::nullopt};
  if (doc.contains("report")) result.report = report_from(doc["report"]);
  return result;
}

ojson instance_doc(const CspInstance& inst, const SparsifierReport* report) {
  ojson doc;
  doc["variables"] = inst.variables();
  doc["domains"] = inst.domains();
  doc["predicate"] = predicate_doc(inst.predicate());
  ojson constraints = ojson::array();
  for (const Constraint& c : inst.constraints()) {
    ojson entry;
    ojson scope = ojson::array();
    for (int v : c.scope) scope.push_back(inst.variables()[v]);
    entry["scope"] = std::move(scope);
    entry["weight"] = c.weight;
    constraints.push_back(std::move(entry));
  }
  doc["constraints"] = std::move(constraints);
  if (report) doc["report"] = report_doc(*report);
  return doc;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson edge_pairs(const WeightedGraph& g) {
  ojson edges = ojson::array();
  for (const Edge& e : g.edges()) edges.push_back(ojson::array({e.u, e.v}));
  return edges;
}

}  // namespace

KaryPredicate predicate_from_json(const std::string& text) {
  return predicate_from(parse_text(text));
}

std::string predicate_to_json(const KaryPredicate& p) {
  return dump(predicate_doc(p));
}

KaryPredicate read_predicate_file(const std::filesystem::path& path) {
  return predicate_from_json(slurp(path));
}

void write_predicate_file(const std::filesystem::path& path, const KaryPredicate& p) {
  spit(path, predicate_to_json(p));
}

InstanceDocument instance_from_json(const std::string& text,
                                    const std::filesystem::path& base_dir) {
  return instance_from(parse_text(text), base_dir);
}

std::string instance_to_json(const CspInstance& inst, const SparsifierReport* report) {
  return dump(instance_doc(inst, report));
}

InstanceDocument read_instance_file(const std::filesystem::path& path) {
  return instance_from(parse_text(slurp(path)), path.parent_path());
}

void write_instance_file(const std::filesystem::path& path, const CspInstance& inst,
                         const SparsifierReport* report) {
  spit(path, instance_to_json(inst, report));
}

std::string cover_bundle_to_json(const KaryPredicate& p) {
  const Colouring colouring = biclique_colouring(p);
  const WeightedGraph aux = auxiliary_graph(p);
  const WeightedGraph comp = bipartite_complement(aux);
  const int r = p.domain_size(0);
  const int s = p.domain_size(1);

  ojson components = ojson::array();
  for (int c = 0; c < colouring.colour_count; ++c) {
    ojson members = ojson::array();
    for (int i = 0; i < r; ++i)
      if (colouring.left[i] == c) members.push_back(i);
    for (int j = 0; j < s; ++j)
      if (colouring.right[j] == c) members.push_back(r + j);
    components.push_back(std::move(members));
  }

  ojson doc;
  doc["predicate"] = predicate_doc(p);
  doc["ell"] = colouring.colour_count;
  doc["auxiliary_graph"] = {{"left_size", r}, {"right_size", s},
                            {"edges", edge_pairs(aux)}};
  doc["complement"] = {{"left_size", r}, {"right_size", s},
                       {"edges", edge_pairs(comp)}};
  doc["components"] = std::move(components);
  doc["colouring"] = {{"left", colouring.left}, {"right", colouring.right}};
  return dump(doc);
}

std::string certificate_to_json(const LowerBoundCertificate& cert) {
  ojson doc;
  doc["bound"] = cert.bound;
  doc["exact"] = cert.exact;
  ojson family = ojson::array();
  for (const Assignment& a : cert.family) family.push_back(a);
  doc["family"] = std::move(family);
  doc["support_sets"] = cert.support_sets;
  return dump(doc);
}

}  // namespace cspar::io
