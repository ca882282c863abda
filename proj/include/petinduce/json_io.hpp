#ifndef PETINDUCE_JSON_IO_HPP
#define PETINDUCE_JSON_IO_HPP

// JSON interchange for all value types.  Field elements travel as the
// human-readable strings "p/q+r/s*phi" so files stay diffable.

#include <json.hpp>

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "geometry.hpp"
#include "induction.hpp"
#include "partition.hpp"
#include "pet.hpp"
#include "words.hpp"

namespace petinduce {

using json = nlohmann::json;

template <int D>
json to_json(const Vec<D>& v) {
    json a = json::array();
    for (int i = 0; i < D; ++i) a.push_back(v[i].str());
    return a;
}

template <int D>
Vec<D> vec_from_json(const json& j) {
    if (!j.is_array() || j.size() != D) throw ParseError("vector: expected array of size " +
                                                         std::to_string(D));
    Vec<D> v;
    for (int i = 0; i < D; ++i) v[i] = FieldElem::parse(j.at(i).get<std::string>());
    return v;
}

template <int D>
json to_json(const ConvexPolytope<D>& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(to_json<D>(v));
    return json{{"dim", D}, {"vertices", verts}};
}

template <int D>
ConvexPolytope<D> polytope_from_json(const json& j) {
    if (j.value("dim", 0) != D) throw ParseError("polytope: dim mismatch");
    std::vector<Vec<D>> vs;
    for (const auto& v : j.at("vertices")) vs.push_back(vec_from_json<D>(v));
    return ConvexPolytope<D>::from_vertices(std::move(vs));
}

template <int D>
json to_json(const LabeledPartition<D>& p) {
    json atoms = json::array();
    for (const auto& a : p.atoms())
        atoms.push_back(json{{"label", a.label}, {"cell", to_json<D>(a.cell)}});
    return json{{"domain", to_json<D>(p.domain())}, {"atoms", atoms}};
}

template <int D>
LabeledPartition<D> partition_from_json(const json& j) {
    ConvexPolytope<D> domain = polytope_from_json<D>(j.at("domain"));
    std::vector<LabeledAtom<D>> atoms;
    for (const auto& a : j.at("atoms"))
        atoms.push_back({a.at("label").get<int>(), polytope_from_json<D>(a.at("cell"))});
    return {std::move(domain), std::move(atoms)};
}

template <int D>
json to_json(const Pet<D>& t) {
    json out = to_json<D>(t.atoms());
    json trans = json::object();
    for (const auto& [label, v] : t.translations()) trans[std::to_string(label)] = to_json<D>(v);
    out["translations"] = trans;
    return out;
}

template <int D>
Pet<D> pet_from_json(const json& j) {
    LabeledPartition<D> atoms = partition_from_json<D>(j);
    std::map<int, Vec<D>> trans;
    for (const auto& [key, v] : j.at("translations").items())
        trans[std::stoi(key)] = vec_from_json<D>(v);
    return {std::move(atoms), std::move(trans)};
}

inline json to_json(const Word2D& w) {
    return json{{"shape", {w.n1(), w.n2()}}, {"entries", w.entries()}};
}

inline Word2D word_from_json(const json& j) {
    return {j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>(),
            j.at("entries").get<std::vector<int>>()};
}

inline json to_json(const Morphism2D& m) {
    json images = json::object();
    for (const auto& [a, w] : m.images()) images[std::to_string(a)] = to_json(w);
    return json{{"images", images}};
}

inline Morphism2D morphism_from_json(const json& j) {
    std::map<int, Word2D> images;
    for (const auto& [key, w] : j.at("images").items())
        images.emplace(std::stoi(key), word_from_json(w));
    return Morphism2D(std::move(images));
}

inline std::map<int, int> permutation_from_json(const json& j) {
    std::map<int, int> p;
    for (const auto& [key, v] : j.items()) p[std::stoi(key)] = v.get<int>();
    return p;
}

template <int D>
json to_json(const InductionResult<D>& r) {
    return json{{"induced_partition", to_json<D>(r.induced_partition)},
                {"substitution", to_json(r.substitution_morphism())},
                {"direction", r.direction == Direction::row ? "row" : "column"},
                {"return_words", r.return_words}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

}  // namespace petinduce

#endif  // PETINDUCE_JSON_IO_HPP
