#include "rqa/json_io.hpp"

#include <stdexcept>

namespace rqa {

Json word_to_json(const Word& w) {
    Json arr = Json::array();
    for (const Step& s : w.steps) arr.push_back(Json::array({s.i, s.j}));
    return arr;
}

Word word_from_json(const Json& j) {
    Word w;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::domain_error("word_from_json: expected [i, j] pairs");
        w.steps.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return w;
}

Json series_to_json(const NcSeries& s) {
    Json arr = Json::array();
    for (const auto& [w, c] : s.terms()) {
        Json t;
        t["word"] = word_to_json(w);
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        arr.push_back(std::move(t));
    }
    return arr;
}

Json query_to_json(const SequenceClassQuery& q) {
    Json j;
    j["p"] = q.p;
    j["r"] = q.r;
    j["pi"] = q.pi.images();
    j["class"] = to_string(q.cls);
    return j;
}

SequenceClassQuery query_from_json(const Json& j) {
    SequenceClassQuery q;
    q.p = j.at("p").get<std::vector<long>>();
    q.r = j.at("r").get<std::vector<long>>();
    q.pi = Permutation(j.at("pi").get<std::vector<int>>());
    q.cls = sequence_class_from_string(j.at("class").get<std::string>());
    return q;
}

ScalarMatrix matrix_from_json(const Json& j) {
    int m = j.at("m").get<int>();
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != m)
        throw std::domain_error("matrix_from_json: wrong number of rows");
    ScalarMatrix A(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(entries[i].size()) != m)
            throw std::domain_error("matrix_from_json: wrong number of columns");
        for (int c = 0; c < m; ++c) {
            const Json& e = entries[i][c];
            if (e.is_number_integer()) {
                A[i][c] = Rational(e.get<long>());
            } else if (e.is_string()) {
                A[i][c] = Rational(e.get<std::string>());
                A[i][c].canonicalize();
            } else {
                throw std::domain_error("matrix_from_json: entries must be integers or strings");
            }
        }
    }
    return A;
}

Json comm_poly_to_json(const CommPoly& p, const std::vector<std::string>& names) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exps"] = e;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        arr.push_back(std::move(t));
    }
    Json j;
    j["nvars"] = p.nvars();
    j["terms"] = std::move(arr);
    j["text"] = p.str(names);
    return j;
}

Json master_formula_to_json(const MasterFormula& f) {
    Json j;
    j["m"] = f.m;
    j["d"] = f.d;
    j["M"] = f.delta_plan.M;
    j["N"] = f.delta_plan.N;
    j["delta"] = f.delta_plan.delta;
    j["prefactor_sign"] = f.prefactor_sign;
    Json terms = Json::array();
    for (std::size_t t = 0; t < f.terms.size(); ++t) {
        Json jt;
        jt["pi"] = f.plans[t].pi;
        Json factors = Json::array();
        for (const MinorRatioFactor& fac : f.terms[t].factors) {
            Json jf;
            jf["sign"] = fac.sign;
            jf["num"] = minor_name(fac.num);
            jf["den"] = minor_name(fac.den);
            factors.push_back(std::move(jf));
        }
        jt["factors"] = std::move(factors);
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    Json minors;
    for (const auto& [key, poly] : f.minors) minors[minor_name(key)] = poly.str();
    j["minors"] = std::move(minors);
    return j;
}

} // namespace rqa
