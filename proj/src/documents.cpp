#include "folbox/documents.hpp"

#include <fstream>

#include "folbox/errors.hpp"
#include "folbox/text.hpp"

namespace folbox {
namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw DocumentError(std::string("missing key \"") + key + "\"");
  }
  return doc.at(key);
}

std::string as_name(const json& j, const char* what) {
  if (!j.is_string()) throw DocumentError(std::string(what) + " must be a string");
  std::string s = j.get<std::string>();
  if (!is_variable_name(s)) throw DocumentError(std::string("invalid ") + what + " \"" + s + "\"");
  return s;
}

Predicate parse_predicate_key(const std::string& key) {
  const auto slash = key.rfind('/');
  if (slash == std::string::npos) throw DocumentError("predicate key \"" + key + "\" lacks /arity");
  Predicate p{key.substr(0, slash), 0};
  if (!is_predicate_name(p.name)) throw DocumentError("invalid predicate name in \"" + key + "\"");
  const std::string digits = key.substr(slash + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ArityError("invalid arity in \"" + key + "\"");
  }
  p.arity = std::stoul(digits);
  return p;
}

}  // namespace

std::string element_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

StructureDoc parse_structure(const json& doc) {
  if (!doc.is_object()) throw DocumentError("structure document must be an object");
  const json& worlds_j = require(doc, "worlds");
  if (!worlds_j.is_array()) throw DocumentError("\"worlds\" must be a list");
  std::vector<std::string> worlds;
  for (const json& w : worlds_j) worlds.push_back(as_name(w, "world name"));

  auto world_index = [&](const std::string& name) -> WorldId {
    for (WorldId i = 0; i < worlds.size(); ++i) {
      if (worlds[i] == name) return i;
    }
    throw UnknownWorld("unknown world " + name);
  };

  const json& domains_j = require(doc, "domains");
  if (!domains_j.is_object()) throw DocumentError("\"domains\" must be an object");
  std::vector<std::vector<std::string>> domains(worlds.size());
  std::vector<bool> seen(worlds.size(), false);
  for (const auto& [wname, elems] : domains_j.items()) {
    const WorldId w = world_index(wname);
    if (!elems.is_array()) throw DocumentError("domain of " + wname + " must be a list");
    for (const json& e : elems) domains[w].push_back(as_name(e, "element name"));
    seen[w] = true;
  }
  for (WorldId w = 0; w < worlds.size(); ++w) {
    if (!seen[w]) throw DomainError("no domain given for world " + worlds[w]);
  }

  auto element_index = [&](WorldId w, const std::string& name) -> ElemId {
    const auto& d = domains[w];
    for (ElemId i = 0; i < d.size(); ++i) {
      if (d[i] == name) return i;
    }
    throw DomainError("element " + name + " is not in the domain of " + worlds[w]);
  };

  std::map<Predicate, Structure::Extension> interp;
  std::map<std::string, std::size_t> arities;
  if (doc.contains("interpretation")) {
    const json& interp_j = doc.at("interpretation");
    if (!interp_j.is_object()) throw DocumentError("\"interpretation\" must be an object");
    for (const auto& [key, per_world] : interp_j.items()) {
      const Predicate p = parse_predicate_key(key);
      if (auto [it, fresh] = arities.emplace(p.name, p.arity); !fresh && it->second != p.arity) {
        throw ArityError("predicate " + p.name + " declared with two arities");
      }
      if (!per_world.is_object()) throw DocumentError("extension of " + key + " must be an object");
      auto& ext = interp[p];
      ext.resize(worlds.size());
      for (const auto& [wname, tuples] : per_world.items()) {
        const WorldId w = world_index(wname);
        if (!tuples.is_array()) throw DocumentError("tuples of " + key + " must be a list");
        for (const json& t : tuples) {
          if (!t.is_array()) throw DocumentError("each tuple of " + key + " must be a list");
          if (t.size() != p.arity) {
            throw ArityError("tuple of length " + std::to_string(t.size()) + " for " + key);
          }
          Tuple tuple;
          for (const json& e : t) tuple.push_back(element_index(w, as_name(e, "element name")));
          ext[w].insert(std::move(tuple));
        }
      }
    }
  }

  StructureDoc out{Structure(std::move(worlds), std::move(domains), std::move(interp)),
                   std::nullopt, std::nullopt};
  const Structure& s = out.structure;

  if (doc.contains("valuation")) {
    const json& val_j = doc.at("valuation");
    if (!val_j.is_object()) throw DocumentError("\"valuation\" must be an object");
    Valuation v;
    for (const auto& [wname, vars] : val_j.items()) {
      const WorldId w = s.world(wname);
      if (!vars.is_object()) throw DocumentError("valuation at " + wname + " must be an object");
      for (const auto& [var, elem] : vars.items()) {
        if (!is_variable_name(var)) throw DocumentError("invalid variable \"" + var + "\"");
        v.assign(w, Var{var}, s.element(w, as_name(elem, "element name")));
      }
    }
    out.valuation = std::move(v);
  }
  if (doc.contains("world")) out.world = s.world(as_name(doc.at("world"), "world name"));
  return out;
}

json structure_to_json(const Structure& s) {
  json doc;
  doc["worlds"] = s.worlds();
  json domains = json::object();
  for (WorldId w = 0; w < s.world_count(); ++w) domains[s.world_name(w)] = s.domain(w);
  doc["domains"] = domains;
  json interp = json::object();
  for (const auto& [p, ext] : s.interpretation()) {
    json per_world = json::object();
    for (WorldId w = 0; w < s.world_count(); ++w) {
      json tuples = json::array();
      for (const Tuple& t : ext[w]) {
        json names = json::array();
        for (ElemId e : t) names.push_back(s.domain(w)[e]);
        tuples.push_back(names);
      }
      per_world[s.world_name(w)] = tuples;
    }
    interp[p.key()] = per_world;
  }
  doc["interpretation"] = interp;
  return doc;
}

json pointed_to_json(const PointedModel& m) {
  json doc = structure_to_json(m.structure);
  json val = json::object();
  for (const auto& [key, e] : m.valuation.entries()) {
    val[m.structure.world_name(key.first)][key.second.name] = m.structure.domain(key.first)[e];
  }
  doc["valuation"] = val;
  doc["world"] = m.structure.world_name(m.world);
  return doc;
}

PointedModel parse_pointed(const json& doc) {
  StructureDoc d = parse_structure(doc);
  if (!d.world) throw DocumentError("missing key \"world\"");
  if (!d.valuation) throw DocumentError("missing key \"valuation\"");
  return PointedModel{std::move(d.structure), *d.world, std::move(*d.valuation)};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError(path.string() + ": " + e.what());
  }
}

}  // namespace folbox
