#include "chiforge/certificate.hpp"

#include <algorithm>
#include <set>

namespace chiforge {

const char* to_string(Mode m) { return m == Mode::strict ? "strict" : "relaxed"; }

Mode parse_mode(const std::string& s) {
    if (s == "strict") return Mode::strict;
    if (s == "relaxed") return Mode::relaxed;
    throw std::invalid_argument("mode must be strict or relaxed, got '" + s + "'");
}

namespace {

template <class V>
auto find_named(std::vector<std::pair<std::string, V>>& v, const std::string& name) {
    return std::find_if(v.begin(), v.end(), [&](const auto& e) { return e.first == name; });
}
template <class V>
auto find_named(const std::vector<std::pair<std::string, V>>& v, const std::string& name) {
    return std::find_if(v.begin(), v.end(), [&](const auto& e) { return e.first == name; });
}
template <class V>
void put_named(std::vector<std::pair<std::string, V>>& v, const std::string& name, V value) {
    auto it = find_named(v, name);
    if (it == v.end())
        v.emplace_back(name, std::move(value));
    else
        it->second = std::move(value);
}

}  // namespace

bool Certificate::has_set(const std::string& name) const { return find_named(sets, name) != sets.end(); }
const VertexSet& Certificate::set(const std::string& name) const {
    auto it = find_named(sets, name);
    if (it == sets.end()) throw CertError("missing set " + name);
    return it->second;
}
void Certificate::put_set(const std::string& name, const VertexSet& s) { put_named(sets, name, s); }

bool Certificate::has_param(const std::string& name) const { return find_named(params, name) != params.end(); }
const Rational& Certificate::param(const std::string& name) const {
    auto it = find_named(params, name);
    if (it == params.end()) throw CertError("missing parameter " + name);
    return it->second;
}
void Certificate::put_param(const std::string& name, const Rational& r) { put_named(params, name, r); }

bool Certificate::has_list(const std::string& name) const { return find_named(lists, name) != lists.end(); }
const std::vector<int>& Certificate::list(const std::string& name) const {
    auto it = find_named(lists, name);
    if (it == lists.end()) throw CertError("missing list " + name);
    return it->second;
}
void Certificate::put_list(const std::string& name, std::vector<int> l) { put_named(lists, name, std::move(l)); }

std::vector<std::string> Certificate::blocks(const std::string& prefix) const {
    std::vector<std::string> out;
    for (int i = 1;; ++i) {
        std::string name = prefix + std::to_string(i);
        if (!has_set(name)) break;
        out.push_back(name);
    }
    return out;
}

void Certificate::put_blocks(const std::string& prefix, const std::vector<VertexSet>& bs) {
    for (std::size_t i = 0; i < bs.size(); ++i) put_set(prefix + std::to_string(i + 1), bs[i]);
}

// ---- JSON ----

Json threshold_to_json(const Threshold& t) {
    if (t.is_constant()) return to_string(t.constant_value());
    return Json{{"c0", to_string(t.c0)}, {"c1", to_string(t.c1)}, {"base", to_string(t.base)},
                {"p", t.p.str()}, {"q", t.q}};
}

Threshold threshold_from_json(const Json& j) {
    if (j.is_string()) return Threshold::constant(parse_rational(j.get<std::string>()));
    if (!j.is_object()) throw CertError("threshold must be a string or an object");
    Threshold t;
    t.c0 = parse_rational(j.at("c0").get<std::string>());
    t.c1 = parse_rational(j.at("c1").get<std::string>());
    t.base = parse_rational(j.at("base").get<std::string>());
    t.p = Int(j.at("p").get<std::string>());
    t.q = j.at("q").get<long>();
    if (t.base <= 0 || t.q <= 0) throw CertError("threshold needs base > 0 and q > 0");
    return t;
}

Json to_json(const Certificate& c) {
    Json j;
    j["kind"] = c.kind;
    j["lemma"] = c.lemma;
    j["bullet"] = c.bullet;
    j["graph6"] = c.graph6;
    j["mode"] = to_string(c.mode);
    j["class"] = std::string(1, c.cls);
    Json params = Json::object();
    for (const auto& [k, v] : c.params) params[k] = to_string(v);
    j["params"] = params;
    Json sets = Json::object();
    for (const auto& [k, v] : c.sets) sets[k] = v.to_vector();
    j["sets"] = sets;
    Json lists = Json::object();
    for (const auto& [k, v] : c.lists) lists[k] = v;
    j["lists"] = lists;
    Json rels = Json::array();
    for (const auto& r : c.relations) {
        Json e{{"rel", r.rel}, {"a", r.a}};
        if (!r.b.empty()) e["b"] = r.b;
        if (r.eps) e["eps"] = threshold_to_json(*r.eps);
        rels.push_back(e);
    }
    j["relations"] = rels;
    Json claims = Json::array();
    for (const auto& cl : c.claims)
        claims.push_back(Json{{"term", cl.term},
                              {"lhs", to_string(Rational(cl.lhs))},
                              {"rel", cl.rel},
                              {"rhs", to_string(cl.rhs)},
                              {"meaning", cl.meaning}});
    j["claims"] = claims;
    j["waivers"] = c.waivers;
    j["trace"] = c.trace;
    j["invocation"] = c.invocation;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    try {
        Certificate c;
        c.kind = j.at("kind").get<std::string>();
        c.lemma = j.at("lemma").get<std::string>();
        c.bullet = j.value("bullet", 0);
        c.graph6 = j.at("graph6").get<std::string>();
        c.mode = parse_mode(j.value("mode", std::string("relaxed")));
        std::string cls = j.value("class", std::string("B"));
        c.cls = cls.empty() ? 'B' : cls[0];
        const Json params = j.value("params", Json::object());
        for (const auto& [k, v] : params.items())
            c.params.emplace_back(k, parse_rational(v.get<std::string>()));
        for (const auto& [k, v] : j.at("sets").items()) {
            VertexSet s;
            for (const auto& x : v) {
                long u = x.get<long>();
                if (u < 0 || u >= kMaxVertices) throw CertError("vertex index out of range in set " + k);
                s.insert(static_cast<int>(u));
            }
            c.sets.emplace_back(k, s);
        }
        const Json lists = j.value("lists", Json::object());
        for (const auto& [k, v] : lists.items())
            c.lists.emplace_back(k, v.get<std::vector<int>>());
        for (const auto& e : j.value("relations", Json::array())) {
            Relation r;
            r.rel = e.at("rel").get<std::string>();
            r.a = e.at("a").get<std::string>();
            r.b = e.value("b", std::string());
            if (e.contains("eps")) r.eps = threshold_from_json(e.at("eps"));
            c.relations.push_back(r);
        }
        for (const auto& e : j.value("claims", Json::array())) {
            Claim cl;
            cl.term = e.at("term").get<std::string>();
            Rational lhs = parse_rational(e.at("lhs").get<std::string>());
            if (boost::multiprecision::denominator(lhs) != 1) throw CertError("claim lhs must be an integer");
            cl.lhs = boost::multiprecision::numerator(lhs);
            cl.rel = e.at("rel").get<std::string>();
            cl.rhs = parse_rational(e.at("rhs").get<std::string>());
            cl.meaning = e.value("meaning", std::string());
            c.claims.push_back(cl);
        }
        c.waivers = j.value("waivers", std::vector<std::string>{});
        c.trace = j.value("trace", Json::array());
        c.invocation = j.value("invocation", Json::object());
        return c;
    } catch (const CertError&) {
        throw;
    } catch (const std::exception& e) {
        throw CertError(std::string("malformed certificate: ") + e.what());
    }
}

// ---- checks ----

namespace {

const VertexSet& named(const Certificate& c, const std::string& name) { return c.set(name); }

int singleton_vertex(const Certificate& c, const std::string& name) {
    const VertexSet& s = named(c, name);
    if (s.size() != 1) throw CertError("set " + name + " is not a singleton");
    return s.first();
}

std::string vname(int v) { return "vertex " + std::to_string(v); }

// lhs < eps * chi, exactly
bool below(const Int& lhs, const Threshold& eps, int chi) { return compare(lhs, eps.scaled(chi)) < 0; }

}  // namespace

Int evaluate_term(Oracle& o, const Certificate& c, const std::string& term) {
    auto open = term.find('('), close = term.rfind(')');
    if (open == std::string::npos || close != term.size() - 1 || close < open)
        throw CertError("malformed term " + term);
    std::string fn = term.substr(0, open), arg = term.substr(open + 1, close - open - 1);
    if (fn == "chi") return o.chi(named(c, arg));
    if (fn == "size") return named(c, arg).size();
    if (fn == "blocks") return static_cast<long>(c.blocks(arg).size());
    if (fn == "count") return static_cast<long>(c.list(arg).size());
    throw CertError("unknown term " + term);
}

std::string check_relation(Oracle& o, const Certificate& c, const Relation& r) {
    const Graph& g = o.graph();
    const std::string& R = r.rel;
    auto need_eps = [&]() -> const Threshold& {
        if (!r.eps) throw CertError("relation " + R + " needs eps");
        return *r.eps;
    };
    if (R == "not_mixed_on_two") {
        const VertexSet& a = named(c, r.a);
        auto bs = c.blocks(r.b);
        for (int u : a) {
            int mixed = 0;
            for (const auto& name : bs)
                if (mixed_on(g, u, named(c, name)) == Mixed::mixed && ++mixed == 2)
                    return "not_mixed_on_two " + r.a + ": " + vname(u) + " is mixed on two blocks";
        }
        return "";
    }
    const VertexSet& a = named(c, r.a);
    if (R == "nonempty") return a.empty() ? "nonempty: " + r.a + " is empty" : "";
    if (R == "singleton") return a.size() == 1 ? "" : "singleton: " + r.a + " has " + std::to_string(a.size()) + " vertices";
    if (R == "connected" || R == "anticonnected") {
        auto mode = R == "connected" ? ComponentMode::connected : ComponentMode::anticonnected;
        return components(g, a, mode).size() == 1 ? "" : R + ": " + r.a + " is not " + R;
    }
    if (R == "self_dense") {
        const Threshold& eps = need_eps();
        int chi = o.chi(a);
        for (int u : a)
            if (!below(o.chi(a - g.closed_nbrs(u)), eps, chi))
                return "self_dense " + r.a + ": violated by " + vname(u);
        return "";
    }
    const VertexSet& b = named(c, r.b);
    if (R == "subset") return a.subset_of(b) ? "" : "subset: " + r.a + " not inside " + r.b;
    if (R == "disjoint") return a.intersects(b) ? "disjoint: " + r.a + " meets " + r.b : "";
    if (R == "complete" || R == "anticomplete" || R == "pure") {
        if (a.intersects(b)) return R + ": " + r.a + " meets " + r.b;
        bool comp = is_complete_to(g, a, b), anti = is_anticomplete_to(g, a, b);
        bool ok = R == "complete" ? comp : R == "anticomplete" ? anti : (comp || anti);
        return ok ? "" : R + ": " + r.a + ", " + r.b + " is not " + R;
    }
    if (R == "dense_to" || R == "anticomplete_or_dense") {
        const Threshold& eps = need_eps();
        if (a.intersects(b)) return R + ": " + r.a + " meets " + r.b;
        if (R == "anticomplete_or_dense" && is_anticomplete_to(g, a, b)) return "";
        int chi = o.chi(b);
        for (int u : a)
            if (!below(o.chi(b - g.nbrs(u)), eps, chi)) return R + " " + r.a + "->" + r.b + ": violated by " + vname(u);
        return "";
    }
    if (R == "nonnbr_at_most") {
        const Threshold& eps = need_eps();
        for (int u : b)
            if (compare(Int(o.chi(a - g.nbrs(u))), eps) > 0)
                return "nonnbr_at_most " + r.a + "," + r.b + ": violated by " + vname(u);
        return "";
    }
    if (R == "in_nbhd") {
        int v = singleton_vertex(c, r.b);
        return a.subset_of(g.nbrs(v)) ? "" : "in_nbhd: " + r.a + " not inside N(" + std::to_string(v) + ")";
    }
    if (R == "off_closed_nbhd") {
        int v = singleton_vertex(c, r.b);
        return a.intersects(g.closed_nbrs(v)) ? "off_closed_nbhd: " + r.a + " meets N[" + std::to_string(v) + "]" : "";
    }
    if (R == "nbhd") {
        int v = singleton_vertex(c, r.b);
        const VertexSet& ground = named(c, "G");
        return a == (g.nbrs(v) & ground) ? "" : "nbhd: " + r.a + " is not N(" + std::to_string(v) + ")";
    }
    throw CertError("unknown relation " + R);
}

std::string check_claim(Oracle& o, const Certificate& c, const Claim& cl) {
    Int actual = evaluate_term(o, c, cl.term);
    if (actual != cl.lhs)
        return "lhs mismatch: " + cl.term + " is " + actual.str() + ", certificate says " + cl.lhs.str();
    Rational lhs(actual);
    bool ok;
    if (cl.rel == ">=")
        ok = lhs >= cl.rhs;
    else if (cl.rel == "<=")
        ok = lhs <= cl.rhs;
    else if (cl.rel == ">")
        ok = lhs > cl.rhs;
    else if (cl.rel == "<")
        ok = lhs < cl.rhs;
    else
        throw CertError("unknown claim relation " + cl.rel);
    if (ok) return "";
    std::string what = cl.term.rfind("chi(", 0) == 0 ? "chi inequality" : "count inequality";
    return what + ": " + cl.term + " = " + actual.str() + " fails " + cl.rel + " " + to_string(cl.rhs) +
           (cl.meaning.empty() ? "" : " (" + cl.meaning + ")");
}

// ---- verification ----

namespace {

bool same_relation(const Relation& x, const Relation& y) {
    if (x.rel != y.rel || x.a != y.a || x.b != y.b || x.eps.has_value() != y.eps.has_value()) return false;
    if (!x.eps) return true;
    const Threshold &s = *x.eps, &t = *y.eps;
    return s.c0 == t.c0 && s.c1 == t.c1 && s.base == t.base && s.p == t.p && s.q == t.q;
}

Verdict reject(std::string why) { return {Verdict::Status::reject, std::move(why)}; }

Verdict verify_in(Oracle& o, const Certificate& c) {
    const Graph& g = o.graph();
    if (!known_lemma(c.lemma)) return reject("unknown lemma " + c.lemma);
    if (c.bullet < 1) return reject("range: unknown bullet " + std::to_string(c.bullet));
    if (c.graph6 != to_graph6(g)) return reject("graph6 does not match the graph");
    for (const auto& [name, s] : c.sets)
        if (!s.empty() && s.last() >= g.n())
            return reject("index out of range: set " + name + " has vertex " + std::to_string(s.last()));
    if (!c.has_set("G")) return reject("missing ground set G");
    std::set<std::string> seen;
    for (const auto& [name, s] : c.sets)
        if (!seen.insert(name).second) return reject("duplicate set " + name);
    for (const auto& r : c.relations)
        if (auto why = check_relation(o, c, r); !why.empty()) return reject(why);
    for (const auto& cl : c.claims)
        if (auto why = check_claim(o, c, cl); !why.empty()) return reject(why);

    Statement st = build_statement(o, c);
    if (!st.range_errors.empty()) return reject("range: " + st.range_errors.front());
    for (const auto& gate : st.gates) {
        std::string why = check_claim(o, c, gate);
        if (why.empty()) continue;
        if (c.mode == Mode::strict) return reject("gate: " + why);
        std::string tag = "gate: " + gate.meaning;
        if (std::find(c.waivers.begin(), c.waivers.end(), tag) == c.waivers.end())
            return reject("unrecorded waiver: " + gate.meaning);
    }
    for (const auto& w : c.waivers)
        if (w.rfind("gate: ", 0) != 0) return reject("waiver of a structural hypothesis: " + w);
    if (c.kind != st.kind) return reject("kind mismatch: certificate says " + c.kind + ", statement gives " + st.kind);
    for (const auto& r : st.relations) {
        bool listed = std::any_of(c.relations.begin(), c.relations.end(),
                                  [&](const Relation& x) { return same_relation(x, r); });
        if (!listed)
            if (auto why = check_relation(o, c, r); !why.empty()) return reject(why);
    }
    for (const auto& cl : st.claims)
        if (auto why = check_claim(o, c, cl); !why.empty()) return reject(why);
    return {};
}

}  // namespace

Verdict verify_certificate(const Graph& g, const Certificate& c, int budget) {
    try {
        Oracle o(g, budget);
        return verify_in(o, c);
    } catch (const BudgetError& e) {
        return {Verdict::Status::budget, e.what()};
    } catch (const CertError& e) {
        return reject(e.what());
    } catch (const std::exception& e) {
        return reject(std::string("malformed certificate: ") + e.what());
    }
}

Verdict verify_certificate(const Graph& g, const Json& j, int budget) {
    try {
        return verify_certificate(g, certificate_from_json(j), budget);
    } catch (const CertError& e) {
        return reject(e.what());
    }
}

// ---- planted faults ----

std::vector<Mutation> plant_faults(const Certificate& c, int n, int count) {
    const Json base = to_json(c);
    std::vector<std::vector<Mutation>> cats;

    auto nonempty = [&](const std::string& name) { return c.has_set(name) && !c.set(name).empty(); };

    {  // raise a lower-bound claim above its true value
        std::vector<Mutation> v;
        for (int bump = 1; bump <= count; ++bump)
            for (std::size_t i = 0; i < c.claims.size(); ++i)
                if (c.claims[i].rel == ">=") {
                    Json j = base;
                    j["claims"][i]["rhs"] = to_string(Rational(c.claims[i].lhs + bump));
                    v.push_back({"inflate_claim", j});
                }
        cats.push_back(std::move(v));
    }
    {  // swap complete and anticomplete on nonempty sets
        std::vector<Mutation> v;
        for (std::size_t i = 0; i < c.relations.size(); ++i) {
            const auto& r = c.relations[i];
            if ((r.rel == "complete" || r.rel == "anticomplete") && nonempty(r.a) && nonempty(r.b)) {
                Json j = base;
                j["relations"][i]["rel"] = r.rel == "complete" ? "anticomplete" : "complete";
                v.push_back({"flip_pair", j});
            }
        }
        cats.push_back(std::move(v));
    }
    {  // density threshold dropped to zero: the first vertex becomes a violator
        std::vector<Mutation> v;
        for (std::size_t i = 0; i < c.relations.size(); ++i) {
            const auto& r = c.relations[i];
            if ((r.rel == "dense_to" || r.rel == "self_dense") && nonempty(r.a)) {
                Json j = base;
                j["relations"][i]["eps"] = "0/1";
                v.push_back({"zero_density", j});
            }
        }
        cats.push_back(std::move(v));
    }
    {  // make two disjoint sets overlap
        std::vector<Mutation> v;
        for (std::size_t i = 0; i < c.relations.size(); ++i) {
            const auto& r = c.relations[i];
            bool pairwise = r.rel == "disjoint" || r.rel == "complete" || r.rel == "anticomplete" || r.rel == "pure" ||
                            r.rel == "dense_to" || r.rel == "anticomplete_or_dense";
            if (pairwise && nonempty(r.a) && nonempty(r.b) && r.a != "G" && r.b != "G") {
                Json j = base;
                j["sets"][r.a].push_back(c.set(r.b).first());
                auto vs = j["sets"][r.a].get<std::vector<int>>();
                std::sort(vs.begin(), vs.end());
                vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                j["sets"][r.a] = vs;
                v.push_back({"overlap_disjoint", j});
            }
        }
        cats.push_back(std::move(v));
    }
    {  // empty a set that must be nonempty
        std::vector<Mutation> v;
        for (const auto& r : c.relations)
            if (r.rel == "nonempty" && nonempty(r.a)) {
                Json j = base;
                j["sets"][r.a] = Json::array();
                v.push_back({"empty_set", j});
            }
        cats.push_back(std::move(v));
    }
    {  // vertex index outside the graph
        std::vector<Mutation> v;
        for (int extra = 0; extra < count; ++extra)
            for (const auto& [name, s] : c.sets) {
                Json j = base;
                j["sets"][name].push_back(n + extra);
                v.push_back({"out_of_range", j});
            }
        cats.push_back(std::move(v));
    }
    {
        Json j = base;
        j["lemma"] = "no_such_lemma";
        cats.push_back({{"unknown_lemma", j}});
    }
    {
        Json j = base;
        j["bullet"] = 99;
        cats.push_back({{"bad_bullet", j}});
    }
    {  // recorded value differs from the recomputed one
        std::vector<Mutation> v;
        for (std::size_t i = 0; i < c.claims.size(); ++i) {
            Json j = base;
            j["claims"][i]["lhs"] = to_string(Rational(c.claims[i].lhs + 1));
            v.push_back({"lhs_tamper", j});
        }
        cats.push_back(std::move(v));
    }
    {
        Json j = base;
        j["graph6"] = to_graph6(Graph(n + 1));
        cats.push_back({{"graph6_tamper", j}});
    }
    {  // pull an upper-bound claim below its true value
        std::vector<Mutation> v;
        for (std::size_t i = 0; i < c.claims.size(); ++i)
            if (c.claims[i].rel == "<=") {
                Json j = base;
                j["claims"][i]["rhs"] = to_string(Rational(c.claims[i].lhs - 1));
                v.push_back({"lower_upper", j});
            }
        cats.push_back(std::move(v));
    }

    std::vector<Mutation> out;
    std::vector<std::size_t> pos(cats.size(), 0);
    for (bool progress = true; progress && static_cast<int>(out.size()) < count;) {
        progress = false;
        for (std::size_t k = 0; k < cats.size() && static_cast<int>(out.size()) < count; ++k)
            if (pos[k] < cats[k].size()) {
                out.push_back(cats[k][pos[k]++]);
                progress = true;
            }
    }
    return out;
}

}  // namespace chiforge
