#include "superschur/json_io.hpp"

#include <stdexcept>

namespace superschur {

using nlohmann::json;

json to_json(const Partition& p) {
    json arr = json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

Partition partition_from_json(const json& j) {
    if (j.is_string()) return Partition::parse(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("partition: expected array or wire string");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

json to_json(const GroupAlgebraElement& x) {
    json terms = json::array();
    for (const auto& [sigma, coeff] : x.terms()) {
        json term;
        term["perm"] = sigma.one_line();
        term["coeff"] = rational_to_string(coeff);
        terms.push_back(term);
    }
    return json{{"degree", x.degree()}, {"terms", terms}};
}

GroupAlgebraElement element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms"))
        throw std::invalid_argument("element: expected {degree, terms}");
    int degree = j.at("degree").get<int>();
    GroupAlgebraElement x(degree);
    for (const auto& term : j.at("terms")) {
        std::vector<int> images = term.at("perm").get<std::vector<int>>();
        if (static_cast<int>(images.size()) != degree)
            throw std::invalid_argument("element: permutation degree mismatch");
        x.add_term(Perm::from_one_line(images),
                   rational_from_string(term.at("coeff").get<std::string>()));
    }
    return x;
}

json to_json(const SuperOperator& op) {
    json entries = json::array();
    const MultiIndexer& ix = op.indexer();
    for (long long r = 0; r < op.side(); ++r) {
        for (const auto& [c, v] : op.row(r)) {
            json entry;
            entry["row"] = ix.digits(r);
            entry["col"] = ix.digits(c);
            entry["coeff"] = rational_to_string(v);
            entries.push_back(entry);
        }
    }
    return json{{"degree", op.degree()},
                {"space", {{"m", op.space().even}, {"n", op.space().odd}}},
                {"entries", entries}};
}

json to_json(const IdealSequence& seq) {
    json killed = json::object();
    if (seq.unit_killed) killed["0"] = json::array({""});
    for (int d = 1; d <= seq.max_degree; ++d) {
        json list = json::array();
        for (const Partition& p : seq.killed[static_cast<size_t>(d)]) list.push_back(p.to_string());
        killed[std::to_string(d)] = list;
    }
    return json{{"rank", seq.rank}, {"max_degree", seq.max_degree}, {"killed", killed}};
}

json to_json(const MatMorphism& f) {
    json entries = json::array();
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) {
            const Rational& v = f.mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v == 0) continue;
            entries.push_back(json{{"row", i}, {"col", j}, {"coeff", rational_to_string(v)}});
        }
    return json{{"source", {{"m", f.source.even}, {"n", f.source.odd}}},
                {"target", {{"m", f.target.even}, {"n", f.target.odd}}},
                {"entries", entries}};
}

MatMorphism morphism_from_json(const json& j) {
    SuperSpace source{j.at("source").at("m").get<int>(), j.at("source").at("n").get<int>()};
    SuperSpace target{j.at("target").at("m").get<int>(), j.at("target").at("n").get<int>()};
    MatMorphism f = MatMorphism::zero(source, target);
    for (const auto& entry : j.at("entries")) {
        int row = entry.at("row").get<int>();
        int col = entry.at("col").get<int>();
        if (row < 0 || row >= f.rows() || col < 0 || col >= f.cols())
            throw std::invalid_argument("morphism: entry out of range");
        f.mat[static_cast<size_t>(row)][static_cast<size_t>(col)] =
            rational_from_string(entry.at("coeff").get<std::string>());
    }
    return f;
}

json to_json(const TracePolynomial& p) {
    json coeffs = json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
    return json{{"coeffs_ascending", coeffs}, {"display", p.to_string()}};
}

} // namespace superschur
