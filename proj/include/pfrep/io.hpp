#ifndef PFREP_IO_HPP
#define PFREP_IO_HPP

// Document formats:
//   skew matrix     {"size": n, "entries": [[i, j, "text"], ...]}
//   representation  {"degree": d, "size": 2d, "ring": "...",
//                    "matrices": {"A": [...], "B": [...], "C": [...]},
//                    "derived": {"a23": "text", ...}}      (degree 5 only)
// Indices are 1-based strict-upper positions; element text uses the ring's
// expression syntax.

#include <sstream>
#include <string>

#include "json.hpp"

#include "pfrep/error.hpp"
#include "pfrep/pfaffian.hpp"
#include "pfrep/representation.hpp"

namespace pfrep {

using Json = nlohmann::ordered_json;

namespace detail {

template <CommutativeRing R>
Json entries_to_json(const SkewMatrix<R>& m) {
    Json entries = Json::array();
    for (const auto& e : m.nonzero_entries()) entries.push_back(Json::array({e.i, e.j, format(m.ring(), e.value)}));
    return entries;
}

inline bool is_index(const Json& v) { return v.is_number_integer() && v.get<long long>() >= 0; }

template <CommutativeRing R>
SkewMatrix<R> entries_from_json(const R& ring, std::size_t size, const Json& entries) {
    if (!entries.is_array()) throw FormatError("entries must be an array");
    std::vector<UpperEntry<R>> list;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 3 || !is_index(e[0]) || !is_index(e[1]) || !e[2].is_string())
            throw FormatError("each entry must be [i, j, \"element\"]");
        list.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), parse(ring, e[2].get<std::string>())});
    }
    return skew_from_upper(ring, size, list);
}

inline std::size_t size_field(const Json& doc) {
    if (!doc.is_object() || !doc.contains("size") || !doc["size"].is_number_integer() ||
        doc["size"].get<long long>() < 0)
        throw FormatError("missing or invalid \"size\"");
    return doc["size"].get<std::size_t>();
}

}  // namespace detail

template <CommutativeRing R>
Json skew_to_json(const SkewMatrix<R>& m) {
    Json doc;
    doc["size"] = m.size();
    doc["entries"] = detail::entries_to_json(m);
    return doc;
}

template <CommutativeRing R>
SkewMatrix<R> skew_from_json(const R& ring, const Json& doc) {
    const std::size_t size = detail::size_field(doc);
    if (!doc.contains("entries")) throw FormatError("missing \"entries\"");
    return detail::entries_from_json(ring, size, doc["entries"]);
}

template <CommutativeRing R>
Json representation_to_json(const Representation<R>& rep) {
    Json doc;
    doc["degree"] = rep.degree;
    doc["size"] = rep.size();
    doc["ring"] = rep.ring().describe();
    doc["matrices"] = Json::object();
    for (char name : {'A', 'B', 'C'}) doc["matrices"][std::string(1, name)] = detail::entries_to_json(rep.matrix(name));
    if (!rep.derived.empty()) {
        doc["derived"] = Json::object();
        for (const auto& [k, v] : rep.derived) doc["derived"][k] = format(rep.ring(), v);
    }
    return doc;
}

template <CommutativeRing R>
Representation<R> representation_from_json(const R& ring, const Json& doc) {
    const std::size_t size = detail::size_field(doc);
    if (!doc.contains("degree") || !doc["degree"].is_number_integer()) throw FormatError("missing or invalid \"degree\"");
    const int degree = doc["degree"].get<int>();
    if (degree < min_degree || degree > max_degree) throw UnsupportedDegree("degree outside 1..5");
    if (size != 2 * static_cast<std::size_t>(degree)) throw ShapeError("size must be twice the degree");
    if (!doc.contains("ring") || !doc["ring"].is_string()) throw FormatError("missing \"ring\"");
    if (doc["ring"].get<std::string>() != ring.describe())
        throw RingMismatch("representation is over " + doc["ring"].get<std::string>() + ", expected " + ring.describe());
    if (!doc.contains("matrices") || !doc["matrices"].is_object()) throw FormatError("missing \"matrices\"");
    const auto& mats = doc["matrices"];
    for (const char* name : {"A", "B", "C"})
        if (!mats.contains(name)) throw FormatError(std::string("missing matrix ") + name);
    Representation<R> rep{degree, detail::entries_from_json(ring, size, mats["A"]),
                          detail::entries_from_json(ring, size, mats["B"]),
                          detail::entries_from_json(ring, size, mats["C"]), {}};
    if (doc.contains("derived")) {
        if (!doc["derived"].is_object()) throw FormatError("\"derived\" must be an object");
        for (const auto& [k, v] : doc["derived"].items()) {
            if (!v.is_string()) throw FormatError("derived values must be strings");
            rep.derived.emplace(k, parse(ring, v.template get<std::string>()));
        }
    }
    return rep;
}

/// Upper-triangle LaTeX layout, lower part marked by a single "*".
template <CommutativeRing R>
std::string skew_to_latex(const SkewMatrix<R>& m) {
    const std::size_t n = m.size();
    std::ostringstream out;
    out << "\\left[\n\\begin{smallmatrix}\n";
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (j > 1) out << " & ";
            if (j == i)
                out << "0";
            else if (j > i)
                out << format(m.ring(), m.upper(i, j), Style::latex);
            else if (i == n && j == 1)
                out << "*";
        }
        out << (i < n ? "\\\\\n\\noalign{\\medskip}" : "\n");
    }
    out << "\\end{smallmatrix}\n\\right]";
    return out.str();
}

template <CommutativeRing R>
std::string representation_to_latex(const Representation<R>& rep) {
    std::ostringstream out;
    out << "M = x\\,[a_{ij}] + y\\,[b_{ij}] + z\\,[c_{ij}]\n\n";
    const char* labels[] = {"[a_{ij}]", "[b_{ij}]", "[c_{ij}]"};
    int k = 0;
    for (char name : {'A', 'B', 'C'}) out << labels[k++] << " = " << skew_to_latex(rep.matrix(name)) << "\n\n";
    for (const auto& [key, v] : rep.derived)
        out << key[0] << "_{" << key[1] << "," << key.substr(2) << "} = " << format(rep.ring(), v, Style::latex)
            << "\n";
    return out.str();
}

template <CommutativeRing R>
std::string representation_to_text(const Representation<R>& rep) {
    std::ostringstream out;
    out << "degree " << rep.degree << " representation over " << rep.ring().describe() << " (" << rep.size() << "x"
        << rep.size() << ")\n";
    for (char name : {'A', 'B', 'C'}) {
        out << name << ":\n";
        for (const auto& e : rep.matrix(name).nonzero_entries())
            out << "  " << name << "[" << e.i << "," << e.j << "] = " << format(rep.ring(), e.value) << "\n";
    }
    if (!rep.derived.empty()) {
        out << "derived:\n";
        for (const auto& [k, v] : rep.derived) out << "  " << k << " = " << format(rep.ring(), v) << "\n";
    }
    return out.str();
}

}  // namespace pfrep

#endif
