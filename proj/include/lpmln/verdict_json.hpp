#pragma once

#include <json.hpp>

#include "lpmln/equiv.hpp"

namespace lpmln {

inline nlohmann::json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const nlohmann::json& j) {
    std::string s = j.get<std::string>();
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline nlohmann::json to_json(const WeightExpr& w) {
    if (w.is_zero()) return {{"zero", true}};
    return {{"soft", w.soft().str()}, {"hard", w.hard()}};
}

inline WeightExpr weight_expr_from_json(const nlohmann::json& j) {
    if (j.contains("zero")) return WeightExpr::zero();
    return WeightExpr::exp(rational_from_json(j.at("soft")), j.at("hard").get<long>());
}

inline nlohmann::json to_json(Interpretation x, const Signature& sig) {
    nlohmann::json names = nlohmann::json::array();
    for (int i = 0; i < sig.size(); ++i)
        if (x.has(i)) names.push_back(sig.name(i));
    return names;
}

inline Interpretation interpretation_from_json(const nlohmann::json& j,
                                               const Signature& sig) {
    Interpretation x{0};
    for (const auto& name : j) x.bits |= Bits(1) << sig.index(name.get<std::string>());
    return x;
}

inline nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    switch (v.kind) {
        case EquivKind::Weak: j["kind"] = "weak"; break;
        case EquivKind::Structural: j["kind"] = "structural"; break;
        case EquivKind::Strong: j["kind"] = "strong"; break;
    }
    j["equivalent"] = v.equivalent;
    j["signature"] = v.sig.names();
    if (v.c_tw) j["c_tw"] = to_json(*v.c_tw);
    if (v.c1) j["c1"] = v.c1->str();
    if (v.c2) j["c2"] = *v.c2;
    if (v.witness) {
        nlohmann::json w;
        if (const auto* wm = std::get_if<WeightMismatch>(&*v.witness)) {
            w["type"] = "weight-mismatch";
            w["x"] = to_json(wm->x, v.sig);
            w["tw_f"] = to_json(wm->tw_f);
            w["tw_g"] = to_json(wm->tw_g);
        } else if (const auto* ri = std::get_if<ReductInequivalence>(&*v.witness)) {
            w["type"] = "reduct-inequivalence";
            w["x"] = to_json(ri->x, v.sig);
            if (ri->countermodel) w["countermodel"] = to_json(*ri->countermodel, v.sig);
        } else if (const auto* dm = std::get_if<DistributionMismatch>(&*v.witness)) {
            w["type"] = "distribution-mismatch";
            w["x"] = to_json(dm->x, v.sig);
        }
        j["witness"] = w;
    }
    return j;
}

inline Verdict verdict_from_json(const nlohmann::json& j) {
    Verdict v;
    std::string kind = j.at("kind").get<std::string>();
    v.kind = kind == "weak"     ? EquivKind::Weak
             : kind == "strong" ? EquivKind::Strong
                                : EquivKind::Structural;
    v.equivalent = j.at("equivalent").get<bool>();
    v.sig = Signature(j.at("signature").get<std::vector<std::string>>());
    if (j.contains("c_tw")) v.c_tw = weight_expr_from_json(j.at("c_tw"));
    if (j.contains("c1")) v.c1 = rational_from_json(j.at("c1"));
    if (j.contains("c2")) v.c2 = j.at("c2").get<long>();
    if (j.contains("witness")) {
        const auto& w = j.at("witness");
        std::string type = w.at("type").get<std::string>();
        if (type == "weight-mismatch") {
            v.witness = WeightMismatch{interpretation_from_json(w.at("x"), v.sig),
                                       weight_expr_from_json(w.at("tw_f")),
                                       weight_expr_from_json(w.at("tw_g"))};
        } else if (type == "reduct-inequivalence") {
            ReductInequivalence ri{interpretation_from_json(w.at("x"), v.sig), {}};
            if (w.contains("countermodel"))
                ri.countermodel = interpretation_from_json(w.at("countermodel"), v.sig);
            v.witness = ri;
        } else {
            v.witness = DistributionMismatch{interpretation_from_json(w.at("x"), v.sig)};
        }
    }
    return v;
}

inline bool operator==(const Verdict& a, const Verdict& b) {
    if (a.kind != b.kind || a.equivalent != b.equivalent || !(a.sig == b.sig))
        return false;
    if (a.c_tw != b.c_tw || a.c1 != b.c1 || a.c2 != b.c2) return false;
    if (a.witness.has_value() != b.witness.has_value()) return false;
    if (!a.witness) return true;
    if (a.witness->index() != b.witness->index()) return false;
    if (const auto* wa = std::get_if<WeightMismatch>(&*a.witness)) {
        const auto& wb = std::get<WeightMismatch>(*b.witness);
        return wa->x == wb.x && wa->tw_f == wb.tw_f && wa->tw_g == wb.tw_g;
    }
    if (const auto* ra = std::get_if<ReductInequivalence>(&*a.witness)) {
        const auto& rb = std::get<ReductInequivalence>(*b.witness);
        return ra->x == rb.x && ra->countermodel == rb.countermodel;
    }
    return std::get<DistributionMismatch>(*a.witness).x ==
           std::get<DistributionMismatch>(*b.witness).x;
}

}  // namespace lpmln
