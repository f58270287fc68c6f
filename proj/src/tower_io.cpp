#include "limtower/tower_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace limtower {

using json = nlohmann::ordered_json;

namespace {

json int_str(const Int& v) { return v.get_str(); }
json int_str(int v) { return std::to_string(v); }

Int parse_int(const json& j, const std::string& path)
{
    require(j.is_string(), "InputError", path + ": expected a decimal integer string");
    const std::string s = j.get<std::string>();
    require(!s.empty(), "InputError", path + ": empty integer");
    Int v;
    require(mpz_set_str(v.get_mpz_t(), s.c_str(), 10) == 0, "InputError",
            path + ": not a decimal integer: '" + s + "'");
    return v;
}

int parse_small(const json& j, const std::string& path)
{
    Int v = parse_int(j, path);
    require(v.fits_sint_p(), "InputError", path + ": value too large");
    return static_cast<int>(v.get_si());
}

const json& member(const json& j, const char* key, const std::string& path)
{
    require(j.is_object(), "InputError", path + ": expected an object");
    auto it = j.find(key);
    require(it != j.end(), "InputError", path + ": missing key '" + key + "'");
    return *it;
}

json matrix_to_json(const IntMatrix& m)
{
    json j = json::object();
    j["rows"] = int_str(m.rows());
    j["cols"] = int_str(m.cols());
    json e = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k)
            e.push_back(int_str(m.at(i, k)));
    j["entries"] = std::move(e);
    return j;
}

IntMatrix matrix_from_json(const json& j, const std::string& path)
{
    int rows = parse_small(member(j, "rows", path), path + ".rows");
    int cols = parse_small(member(j, "cols", path), path + ".cols");
    require(rows >= 0 && cols >= 0, "InputError", path + ": negative dimensions");
    const json& e = member(j, "entries", path);
    require(e.is_array(), "InputError", path + ".entries: expected an array");
    require(static_cast<long long>(e.size()) == 1LL * rows * cols, "InputError",
            path + ".entries: expected " + std::to_string(1LL * rows * cols) + " entries, got " +
                std::to_string(e.size()));
    IntMatrix m(rows, cols);
    int idx = 0;
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            m.at(i, k) = parse_int(e[idx], path + ".entries[" + std::to_string(idx) + "]");
            ++idx;
        }
    return m;
}

json group_to_json(const FgAbGroup& g)
{
    json j = json::object();
    j["free_rank"] = int_str(g.free_rank);
    json t = json::array();
    for (const Int& d : g.torsion)
        t.push_back(int_str(d));
    j["torsion"] = std::move(t);
    return j;
}

FgAbGroup group_from_json(const json& j, const std::string& path)
{
    int free = parse_small(member(j, "free_rank", path), path + ".free_rank");
    const json& t = member(j, "torsion", path);
    require(t.is_array(), "InputError", path + ".torsion: expected an array");
    IntVec tors;
    for (std::size_t i = 0; i < t.size(); ++i)
        tors.push_back(parse_int(t[i], path + ".torsion[" + std::to_string(i) + "]"));
    try {
        return FgAbGroup(free, std::move(tors));
    } catch (const Error& e) {
        fail("InputError", path + ": " + e.what());
    }
}

json complex_to_json(const ChainComplex& c)
{
    json j = json::object();
    j["top_degree"] = int_str(c.top_degree());
    json r = json::array();
    for (int k = 0; k <= c.top_degree(); ++k)
        r.push_back(int_str(c.rank(k)));
    j["ranks"] = std::move(r);
    json b = json::array();
    for (int k = 1; k <= c.top_degree(); ++k)
        b.push_back(matrix_to_json(c.boundary(k)));
    j["boundaries"] = std::move(b);
    return j;
}

ChainComplex complex_from_json(const json& j, const std::string& path)
{
    int top = parse_small(member(j, "top_degree", path), path + ".top_degree");
    require(top >= 0, "InputError", path + ".top_degree: must be nonnegative");
    const json& r = member(j, "ranks", path);
    require(r.is_array() && static_cast<int>(r.size()) == top + 1, "InputError",
            path + ".ranks: expected " + std::to_string(top + 1) + " ranks");
    std::vector<int> ranks;
    for (std::size_t i = 0; i < r.size(); ++i)
        ranks.push_back(parse_small(r[i], path + ".ranks[" + std::to_string(i) + "]"));
    const json& b = member(j, "boundaries", path);
    require(b.is_array() && static_cast<int>(b.size()) == top, "InputError",
            path + ".boundaries: expected " + std::to_string(top) + " matrices");
    std::vector<IntMatrix> bd;
    for (std::size_t i = 0; i < b.size(); ++i)
        bd.push_back(matrix_from_json(b[i], path + ".boundaries[" + std::to_string(i) + "]"));
    try {
        return ChainComplex(std::move(ranks), std::move(bd));
    } catch (const Error& e) {
        fail("InputError", path + ": " + e.what());
    }
}

json chain_map_to_json(const ChainMap& m)
{
    json j = json::object();
    json d = json::array();
    int top = std::max(m.source().top_degree(), m.target().top_degree());
    for (int k = 0; k <= top; ++k)
        d.push_back(matrix_to_json(m.matrix(k)));
    j["degrees"] = std::move(d);
    return j;
}

ChainMap chain_map_from_json(const json& j, const ChainComplex& source,
                             const ChainComplex& target, const std::string& path)
{
    const json& d = member(j, "degrees", path);
    int top = std::max(source.top_degree(), target.top_degree());
    require(d.is_array() && static_cast<int>(d.size()) == top + 1, "InputError",
            path + ".degrees: expected " + std::to_string(top + 1) + " matrices");
    std::vector<IntMatrix> f;
    for (std::size_t i = 0; i < d.size(); ++i)
        f.push_back(matrix_from_json(d[i], path + ".degrees[" + std::to_string(i) + "]"));
    try {
        return ChainMap(source, target, std::move(f));
    } catch (const Error& e) {
        fail("InputError", path + ": " + e.what());
    }
}

json cayley_to_json(const CayleyTable& g)
{
    json j = json::object();
    j["order"] = int_str(g.order);
    json rows = json::array();
    for (int a = 0; a < g.order; ++a) {
        json row = json::array();
        for (int b = 0; b < g.order; ++b)
            row.push_back(int_str(g.mul(a, b)));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    return j;
}

CayleyTable cayley_from_json(const json& j, const std::string& path)
{
    int order = parse_small(member(j, "order", path), path + ".order");
    require(order >= 1, "InputError", path + ".order: must be positive");
    const json& rows = member(j, "table", path);
    require(rows.is_array() && static_cast<int>(rows.size()) == order, "InputError",
            path + ".table: expected " + std::to_string(order) + " rows");
    std::vector<int> t;
    for (int a = 0; a < order; ++a) {
        const json& row = rows[a];
        require(row.is_array() && static_cast<int>(row.size()) == order, "InputError",
                path + ".table[" + std::to_string(a) + "]: expected " + std::to_string(order) +
                    " entries");
        for (int b = 0; b < order; ++b)
            t.push_back(parse_small(
                row[b], path + ".table[" + std::to_string(a) + "][" + std::to_string(b) + "]"));
    }
    try {
        return CayleyTable(order, std::move(t));
    } catch (const Error& e) {
        fail("InputError", path + ": " + e.what());
    }
}

json index_map_to_json(const IndexMap& m)
{
    json j = json::array();
    for (int x : m.image)
        j.push_back(int_str(x));
    return j;
}

IndexMap index_map_from_json(const json& j, const std::string& path)
{
    require(j.is_array(), "InputError", path + ": expected an array");
    IndexMap m;
    for (std::size_t i = 0; i < j.size(); ++i)
        m.image.push_back(parse_small(j[i], path + "[" + std::to_string(i) + "]"));
    return m;
}

TailKind tail_kind_from_json(const json& j, const std::string& path)
{
    require(j.is_string(), "InputError", path + ": expected a tail kind string");
    std::string s = j.get<std::string>();
    if (s == "trivial")
        return TailKind::Trivial;
    if (s == "constant")
        return TailKind::Constant;
    if (s == "periodic")
        return TailKind::Periodic;
    fail("InputError", path + ": unknown tail kind '" + s + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string serialize_tower(const AbelianTower& t)
{
    json j = json::object();
    j["kind"] = "abelian_tower";
    json w = json::array();
    for (const FgAbGroup& g : t.window)
        w.push_back(group_to_json(g));
    j["window"] = std::move(w);
    json m = json::array();
    for (const GroupHom& h : t.maps)
        m.push_back(matrix_to_json(h.matrix));
    j["maps"] = std::move(m);
    json tail = json::object();
    tail["kind"] = tail_kind_name(t.tail);
    if (t.tail_endo)
        tail["endo"] = matrix_to_json(t.tail_endo->matrix);
    j["tail"] = std::move(tail);
    return dump(j);
}

std::string serialize_tower(const FiniteGroupTower& t)
{
    json j = json::object();
    j["kind"] = "finite_tower";
    json w = json::array();
    for (const CayleyTable& g : t.window)
        w.push_back(cayley_to_json(g));
    j["window"] = std::move(w);
    json m = json::array();
    for (const IndexMap& f : t.maps)
        m.push_back(index_map_to_json(f));
    j["maps"] = std::move(m);
    json tail = json::object();
    tail["kind"] = tail_kind_name(t.tail);
    if (t.tail_endo)
        tail["endo"] = index_map_to_json(*t.tail_endo);
    j["tail"] = std::move(tail);
    return dump(j);
}

std::string serialize_tower(const ChainTower& t)
{
    json j = json::object();
    j["kind"] = "chain_tower";
    json w = json::array();
    for (const ChainComplex& c : t.window)
        w.push_back(complex_to_json(c));
    j["window"] = std::move(w);
    json m = json::array();
    for (const ChainMap& f : t.maps)
        m.push_back(chain_map_to_json(f));
    j["maps"] = std::move(m);
    json tail = json::object();
    tail["kind"] = tail_kind_name(t.tail);
    if (t.tail_endo)
        tail["endo"] = chain_map_to_json(*t.tail_endo);
    j["tail"] = std::move(tail);
    return dump(j);
}

std::string serialize_tower(const TowerValue& t)
{
    return std::visit([](const auto& v) { return serialize_tower(v); }, t);
}

TowerValue parse_tower(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail("InputError", std::string("JSON parse error: ") + e.what());
    }
    const json& kind_j = member(j, "kind", "$");
    require(kind_j.is_string(), "InputError", "$.kind: expected a string");
    const std::string kind = kind_j.get<std::string>();

    const json& w = member(j, "window", "$");
    require(w.is_array() && !w.empty(), "InputError", "$.window: expected a nonempty array");
    const json& m = member(j, "maps", "$");
    require(m.is_array() && m.size() + 1 == w.size(), "InputError",
            "$.maps: expected one map per level 1..N");
    const json& tail_j = member(j, "tail", "$");
    TailKind tail = tail_kind_from_json(member(tail_j, "kind", "$.tail"), "$.tail.kind");
    bool has_endo = tail_j.is_object() && tail_j.contains("endo");
    require((tail == TailKind::Periodic) == has_endo, "InputError",
            "$.tail: periodic tails need 'endo', other tails must not have one");

    auto wrap = [](const char* what, auto&& fn) -> TowerValue {
        try {
            return fn();
        } catch (const Error& e) {
            if (std::string(e.kind()) == "InputError")
                throw;
            fail("InputError", std::string(what) + ": " + e.what());
        }
    };

    if (kind == "abelian_tower") {
        std::vector<FgAbGroup> window;
        for (std::size_t i = 0; i < w.size(); ++i)
            window.push_back(group_from_json(w[i], "$.window[" + std::to_string(i) + "]"));
        std::vector<GroupHom> maps;
        for (std::size_t i = 0; i < m.size(); ++i) {
            IntMatrix mat = matrix_from_json(m[i], "$.maps[" + std::to_string(i) + "]");
            try {
                maps.emplace_back(window[i + 1], window[i], std::move(mat));
            } catch (const Error& e) {
                fail("InputError", "$.maps[" + std::to_string(i) + "]: " + e.what());
            }
        }
        std::optional<GroupHom> endo;
        if (has_endo) {
            IntMatrix mat = matrix_from_json(tail_j["endo"], "$.tail.endo");
            try {
                endo.emplace(window.back(), window.back(), std::move(mat));
            } catch (const Error& e) {
                fail("InputError", std::string("$.tail.endo: ") + e.what());
            }
        }
        return wrap("abelian tower", [&]() -> TowerValue {
            return AbelianTower(std::move(window), std::move(maps), tail, std::move(endo));
        });
    }
    if (kind == "finite_tower") {
        std::vector<CayleyTable> window;
        for (std::size_t i = 0; i < w.size(); ++i)
            window.push_back(cayley_from_json(w[i], "$.window[" + std::to_string(i) + "]"));
        std::vector<IndexMap> maps;
        for (std::size_t i = 0; i < m.size(); ++i)
            maps.push_back(index_map_from_json(m[i], "$.maps[" + std::to_string(i) + "]"));
        std::optional<IndexMap> endo;
        if (has_endo)
            endo = index_map_from_json(tail_j["endo"], "$.tail.endo");
        return wrap("finite tower", [&]() -> TowerValue {
            return FiniteGroupTower(std::move(window), std::move(maps), tail, std::move(endo));
        });
    }
    if (kind == "chain_tower") {
        std::vector<ChainComplex> window;
        for (std::size_t i = 0; i < w.size(); ++i)
            window.push_back(complex_from_json(w[i], "$.window[" + std::to_string(i) + "]"));
        std::vector<ChainMap> maps;
        for (std::size_t i = 0; i < m.size(); ++i)
            maps.push_back(chain_map_from_json(m[i], window[i + 1], window[i],
                                               "$.maps[" + std::to_string(i) + "]"));
        std::optional<ChainMap> endo;
        if (has_endo)
            endo = chain_map_from_json(tail_j["endo"], window.back(), window.back(),
                                       "$.tail.endo");
        return wrap("chain tower", [&]() -> TowerValue {
            return ChainTower(std::move(window), std::move(maps), tail, std::move(endo));
        });
    }
    fail("InputError", "$.kind: unknown tower kind '" + kind + "'");
}

std::string digest64(const std::string& bytes)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace limtower
