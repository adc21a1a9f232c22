#include "gra/structure.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gra {

Structure::Structure(Vocabulary vocab, int domain_size)
    : vocab_(std::move(vocab)), n_(domain_size) {
  if (n_ < 1) throw Error("structure domain must be nonempty");
  for (const auto& [name, ar] : vocab_.symbols()) rels_.emplace(name, ADRelation(ar));
}

const ADRelation& Structure::relation(const std::string& name) const {
  auto it = rels_.find(name);
  if (it == rels_.end()) throw Error("structure has no symbol '" + name + "'");
  return it->second;
}

void Structure::set_relation(const std::string& name, ADRelation rel) {
  int ar = vocab_.arity(name);
  if (rel.arity() != ar)
    throw Error("relation arity mismatch for '" + name + "'");
  for (const Tuple& t : rel.tuples())
    for (int v : t)
      if (v < 0 || v >= n_) throw Error("tuple element out of domain in '" + name + "'");
  rels_.insert_or_assign(name, std::move(rel));
}

void Structure::add_tuple(const std::string& name, Tuple t) {
  int ar = vocab_.arity(name);
  if (static_cast<int>(t.size()) != ar) throw Error("tuple arity mismatch for '" + name + "'");
  for (int v : t)
    if (v < 0 || v >= n_) throw Error("tuple element out of domain in '" + name + "'");
  rels_.at(name).insert(std::move(t));
}

Structure Structure::permuted(const std::vector<int>& perm) const {
  Structure out(vocab_, n_);
  for (const auto& [name, rel] : rels_) {
    std::vector<Tuple> tuples;
    for (const Tuple& t : rel.tuples()) {
      Tuple u(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) u[i] = perm[t[i]];
      tuples.push_back(std::move(u));
    }
    out.set_relation(name, ADRelation(rel.arity(), std::move(tuples)));
  }
  return out;
}

Structure Structure::expanded(const Vocabulary& bigger) const {
  for (const auto& [name, ar] : vocab_.symbols())
    if (!bigger.contains(name) || bigger.arity(name) != ar)
      throw Error("expanded: vocabulary is not an extension");
  Structure out(bigger, n_);
  for (const auto& [name, rel] : rels_) out.set_relation(name, rel);
  return out;
}

std::string Structure::to_json() const {
  nlohmann::json j;
  j["domain"] = n_;
  nlohmann::json rels = nlohmann::json::object();
  for (const auto& [name, rel] : rels_) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Tuple& t : rel.tuples()) arr.push_back(t);
    rels[name] = arr;
  }
  j["relations"] = rels;
  return j.dump(2);
}

Structure Structure::from_json(const std::string& json_text, const Vocabulary& vocab) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.contains("domain")) throw Error("structure json: missing 'domain'");
  Structure out(vocab, j["domain"].get<int>());
  if (j.contains("relations")) {
    for (auto& [name, arr] : j["relations"].items()) {
      if (!vocab.contains(name))
        throw Error("structure json: undeclared relation symbol '" + name + "'");
      std::vector<Tuple> tuples;
      for (auto& t : arr) tuples.push_back(t.get<Tuple>());
      out.set_relation(name, ADRelation(vocab.arity(name), std::move(tuples)));
    }
  }
  return out;
}

Structure Structure::load_json_file(const std::string& path, const Vocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open structure file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), vocab);
}

}  // namespace gra
