#include "umbral/io.hpp"

#include "umbral/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace umbral {

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("polynomial JSON must be an array of coefficient strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) {
        if (item.is_string()) {
            coeffs.push_back(rational_from_string(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            coeffs.emplace_back(Int(item.get<long long>()));
        } else {
            throw InputError("polynomial coefficients must be strings (or plain integers)");
        }
    }
    return Poly(std::move(coeffs));
}

std::string poly_to_csv(const Poly& p) {
    std::ostringstream os;
    bool first = true;
    for (const Rational& c : p.coeffs()) {
        if (!first) os << ",";
        os << rational_to_string(c);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Json fact_poly_to_json(const FactPoly& f) {
    Json arr = Json::array();
    for (const Rational& c : f.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

Json certificate_to_json(const RzCertificate& cert) {
    Json j;
    j["all_real"] = cert.all_real;
    j["degree"] = cert.degree;
    j["real_root_count_with_multiplicity"] = cert.real_root_count_with_multiplicity;
    j["squarefree_part_degree"] = cert.squarefree_part_degree;
    j["sturm_sign_variations"] = Json::array({cert.sturm_sign_variations.first, cert.sturm_sign_variations.second});
    return j;
}

Json verdict_to_json(const SeqVerdict& v) {
    Json j;
    j["property"] = v.property == SeqProperty::LogConcave ? "log-concave" : "log-convex";
    j["holds"] = v.holds;
    if (v.first_violation_index) {
        j["first_violation_index"] = *v.first_violation_index;
    } else {
        j["first_violation_index"] = nullptr;
    }
    return j;
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertex_count;
    Json edges = Json::array();
    for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw InputError("graph JSON needs {\"vertices\": n, \"edges\": [[u,v], ...]}");
    }
    if (!j["vertices"].is_number_integer()) throw InputError("graph vertex count must be an integer");
    const int n = j["vertices"].get<int>();
    std::vector<std::pair<int, int>> edges;
    if (!j["edges"].is_array()) throw InputError("graph edges must be an array of pairs");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InputError("each edge must be a pair of vertex indices");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_graph(n, std::move(edges));
}

namespace {

bool parse_preset(const std::string& text, const std::string& name, int& arg) {
    if (text.rfind(name + ":", 0) != 0) return false;
    try {
        std::size_t used = 0;
        arg = std::stoi(text.substr(name.size() + 1), &used);
        if (used != text.size() - name.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw InputError("malformed preset '" + text + "'");
    }
    return true;
}

} // namespace

Graph graph_from_text(const std::string& text) {
    int arg = 0;
    if (parse_preset(text, "path", arg)) return path_graph(arg);
    if (parse_preset(text, "cycle", arg)) return cycle_graph(arg);
    if (parse_preset(text, "complete", arg)) return complete_graph(arg);
    if (parse_preset(text, "star", arg)) return star_graph(arg);
    std::string payload = text;
    if (!text.empty() && text[0] != '{' && text[0] != '[') {
        std::ifstream in(text);
        if (!in) throw InputError("cannot read graph file '" + text + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        payload = buf.str();
    }
    Json j = Json::parse(payload, nullptr, false);
    if (j.is_discarded()) throw InputError("graph input is neither a preset nor valid JSON");
    return graph_from_json(j);
}

Seq seq_from_text(const std::string& text, std::size_t len) {
    if (text == "ones") return seq_ones(len);
    if (text == "factorials") return seq_factorials(len);
    if (text == "factorials-offset") return seq_factorials_offset(len);
    if (text == "log") return seq_log_coeffs(len);
    int m = 0;
    if (parse_preset(text, "shift", m)) {
        if (m < 0) throw InputError("shift amount must be non-negative");
        return shift_seq(seq_ones(len), static_cast<unsigned>(m));
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
        throw InputError("sequence must be a preset name or a JSON array of rational strings");
    }
    std::vector<Rational> entries;
    entries.reserve(j.size());
    for (const auto& item : j) {
        if (item.is_string()) {
            entries.push_back(rational_from_string(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            entries.emplace_back(Int(item.get<long long>()));
        } else {
            throw InputError("sequence entries must be strings (or plain integers)");
        }
    }
    return Seq(std::move(entries));
}

} // namespace umbral
