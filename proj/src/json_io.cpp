#include "mereo/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mereo/error.hpp"

namespace mereo {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string("at document root") : "at " + where) + ": " + what);
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object()) fail("", "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail("", std::string("missing \"") + key + "\"");
  return *it;
}

std::string label_at(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(where, "label must be a string or an integer");
}

std::uint64_t count_at(const Json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    fail(where, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<std::size_t> class_ids(const Json& doc, const char* key, std::size_t n) {
  const Json& arr = member(doc, key);
  const std::string where = std::string("/") + key;
  if (!arr.is_array()) fail(where, "expected an array of class ids");
  if (arr.size() != n) fail(where, "expected one class id per world");
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(count_at(arr[i], where + "/" + std::to_string(i)));
  return ids;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

DocumentKind detect_kind(const Json& doc) {
  if (!doc.is_object()) fail("", "expected an object");
  if (doc.contains("universe")) return DocumentKind::topology;
  if (doc.contains("atoms")) return DocumentKind::eca;
  if (doc.contains("worlds")) return DocumentKind::frame;
  fail("", "not a topology (\"universe\"), ECA (\"atoms\") or frame (\"worlds\") document");
}

LabeledSpace parse_topology(const Json& doc, const Caps& caps) {
  const Json& universe = member(doc, "universe");
  if (!universe.is_array() || universe.empty()) fail("/universe", "expected a nonempty array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < universe.size(); ++i) labels.push_back(label_at(universe[i], "/universe/" + std::to_string(i)));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) fail("/universe/" + std::to_string(i), "duplicate label \"" + labels[i] + "\"");
    }
  }
  if (labels.size() > kMaxUniverse) fail("/universe", "more than 64 points");

  std::vector<std::vector<std::string>> subbasis;
  if (doc.contains("subbasis")) {
    const Json& sb = doc["subbasis"];
    if (!sb.is_array()) fail("/subbasis", "expected an array of label arrays");
    for (std::size_t i = 0; i < sb.size(); ++i) {
      const std::string where = "/subbasis/" + std::to_string(i);
      if (!sb[i].is_array()) fail(where, "expected an array of labels");
      std::vector<std::string> members;
      for (std::size_t j = 0; j < sb[i].size(); ++j) {
        const std::string at = where + "/" + std::to_string(j);
        std::string l = label_at(sb[i][j], at);
        if (std::find(labels.begin(), labels.end(), l) == labels.end()) fail(at, "unknown label \"" + l + "\"");
        members.push_back(std::move(l));
      }
      subbasis.push_back(std::move(members));
    }
  }
  return make_labeled_space(std::move(labels), subbasis, caps);
}

CoveringRelation parse_covering(const Json& doc) {
  const std::uint64_t k = count_at(member(doc, "atoms"), "/atoms");
  if (k == 0 || k > kMaxAtoms) fail("/atoms", "atom count must be between 1 and " + std::to_string(kMaxAtoms));
  const FiniteBooleanAlgebra ba(static_cast<unsigned>(k));
  if (doc.contains("covering_mode")) {
    const Json& mode = doc["covering_mode"];
    if (mode != "discrete") fail("/covering_mode", "the only supported mode is \"discrete\"");
    if (doc.contains("covering")) fail("/covering", "give either \"covering\" or \"covering_mode\", not both");
    return CoveringRelation::discrete(ba);
  }
  const Json& triples = member(doc, "covering");
  if (!triples.is_array()) fail("/covering", "expected an array of [a, b, d] triples");
  CoveringRelation v(ba);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const std::string where = "/covering/" + std::to_string(i);
    const Json& t = triples[i];
    if (!t.is_array() || t.size() != 3) fail(where, "expected a triple [a, b, d]");
    Element e[3];
    for (std::size_t j = 0; j < 3; ++j) {
      const std::uint64_t x = count_at(t[j], where + "/" + std::to_string(j));
      if (x >= ba.size()) {
        fail(where + "/" + std::to_string(j),
             "element " + std::to_string(x) + " is outside the algebra with " + std::to_string(k) + " atoms");
      }
      e[j] = static_cast<Element>(x);
    }
    v.set(e[0], e[1], e[2], true);
  }
  return v;
}

Frame parse_frame(const Json& doc) {
  const std::uint64_t n = count_at(member(doc, "worlds"), "/worlds");
  if (n == 0 || n > kMaxUniverse) fail("/worlds", "world count must be between 1 and 64");
  Partition p1(class_ids(doc, "classes", n));
  if (!doc.contains("classes2")) return EquivalenceFrame1(std::move(p1));
  return EquivalenceFrame2(std::move(p1), Partition(class_ids(doc, "classes2", n)));
}

Json labels_json(const LabeledSpace& space, const PointSet& s) { return Json(space.labels_of(s)); }

Json checks_json(const Report& r, const ElementRenderer& render) {
  Json out = Json::array();
  for (const Verdict& v : r.verdicts) {
    Json w = nullptr;
    if (!v.pass) {
      w = Json::array();
      for (std::uint64_t x : v.witness) w.push_back(render ? render(x) : Json(x));
    }
    out.push_back(Json{{"name", v.name}, {"pass", v.pass}, {"witness", w}});
  }
  return out;
}

ElementRenderer region_renderer(const LabeledSpace& space, const RegularClosedAlgebra& alg) {
  return [&space, &alg](std::uint64_t e) { return labels_json(space, alg.from_atom_mask(e)); };
}

namespace {

Json world_mask_json(const WorldSet& s) {
  Json out = Json::array();
  for (std::size_t i : s.members()) out.push_back(i);
  return out;
}

Json atom_point_worlds_json(const LabeledSpace& space, const RegularClosedAlgebra& alg,
                            const std::vector<WorldAtomPoint>& worlds) {
  Json out = Json::array();
  for (const auto& w : worlds) {
    out.push_back(Json{{"atom", labels_json(space, alg.atom(w.atom))}, {"point", space.labels.at(w.point)}});
  }
  return out;
}

Json region_embedding_json(const LabeledSpace& space, const RegularClosedAlgebra& alg, const Embedding& h) {
  Json out = Json::object();
  for (Element a = 0; a < h.image.size(); ++a) out[space.render(alg.from_atom_mask(a))] = world_mask_json(h.image[a]);
  return out;
}

}  // namespace

Json representation_json(const ParametrizedRepresentation& r, const Report& checks) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < r.frame.world_count(); ++i) gens.push_back(std::uint64_t{1} << i);
  Json embedding = Json::object();
  for (Element a = 0; a < r.embedding.image.size(); ++a) embedding[std::to_string(a)] = world_mask_json(r.embedding.image[a]);
  return Json{{"pipeline", "parametrized"},
              {"checks", checks_json(checks)},
              {"frame", Json{{"kind", "parametrized"},
                             {"worlds", r.frame.world_count()},
                             {"world_generators", gens},
                             {"antitone", r.frame.antitone()}}},
              {"embedding", embedding}};
}

Json representation_json(const LabeledSpace& space, const Type1Representation& r, const Report& checks) {
  return Json{{"pipeline", "type1"},
              {"checks", checks_json(checks, region_renderer(space, r.algebra))},
              {"frame", Json{{"kind", "type1"},
                             {"worlds", r.frame.world_count()},
                             {"world_labels", atom_point_worlds_json(space, r.algebra, r.worlds)},
                             {"classes", r.frame.equiv().class_ids()}}},
              {"embedding", region_embedding_json(space, r.algebra, r.embedding)}};
}

Json representation_json(const LabeledSpace& space, const Type2Representation& r, const Report& checks) {
  return Json{{"pipeline", "type2"},
              {"checks", checks_json(checks, region_renderer(space, r.algebra))},
              {"frame", Json{{"kind", "type2"},
                             {"worlds", r.frame.world_count()},
                             {"world_labels", atom_point_worlds_json(space, r.algebra, r.worlds)},
                             {"classes", r.frame.equiv1().class_ids()},
                             {"classes2", r.frame.equiv2().class_ids()}}},
              {"embedding", region_embedding_json(space, r.algebra, r.embedding)}};
}

}  // namespace mereo
