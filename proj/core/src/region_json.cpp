#include "rhombil/errors.hpp"
#include "rhombil/lattice.hpp"

#include <json.hpp>

namespace rhombil {

namespace {

using json = nlohmann::ordered_json;

json integer_json(const Integer& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Integer integer_from(const json& j)
{
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string");
        return v;
    }
    throw ParseError("expected an integer");
}

json seq_json(const HoleSeq& s)
{
    json a = json::array();
    for (int v : s) a.push_back(v);
    return a;
}

json params_json(const std::optional<RegionSpec>& s)
{
    json p = json::object();
    if (!s) return p;
    switch (s->family) {
    case Family::P: case Family::Pp:
        p["a"] = s->a;
        p["b"] = s->b;
        p["c"] = s->c;
        break;
    case Family::Q: case Family::Qp: case Family::K: case Family::Kp:
        p["t"] = seq_json(s->seq);
        break;
    default:
        p["x"] = s->x;
        p["y"] = s->y;
        p["z"] = s->z;
        p["holes"] = seq_json(s->seq);
        break;
    }
    return p;
}

int int_field(const json& p, const char* key)
{
    if (!p.contains(key) || !p[key].is_number_integer()) throw ParseError(std::string("params.") + key + " missing");
    return p[key].get<int>();
}

HoleSeq seq_field(const json& p, const char* key)
{
    if (!p.contains(key) || !p[key].is_array()) throw ParseError(std::string("params.") + key + " missing");
    HoleSeq s;
    for (const auto& v : p[key]) s.push_back(v.get<int>());
    return s;
}

Cell cell_from(const json& j)
{
    if (!j.is_array() || j.size() < 2) throw ParseError("cell must be [row, col, ...]");
    return Cell{j[0].get<int>(), j[1].get<int>()};
}

} // namespace

std::string spec_params_json(const RegionSpec& s) { return params_json(s).dump(); }

std::string region_to_json(const Region& r)
{
    json doc;
    doc["family"] = r.spec ? std::string(family_name(r.spec->family)) : std::string("custom");
    doc["params"] = params_json(r.spec);
    json cells = json::array();
    for (Cell c : r.cells) cells.push_back(json::array({c.row, c.col, c.up() ? "U" : "D"}));
    doc["cells"] = std::move(cells);
    json weights = json::array();
    for (const auto& [e, w] : r.weights)
        weights.push_back(json::array({json::array({e.first.row, e.first.col}), json::array({e.second.row, e.second.col}),
                                       integer_json(w.get_num()), integer_json(w.get_den())}));
    doc["weights"] = std::move(weights);
    return doc.dump();
}

Region region_from_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("region JSON: ") + e.what());
    }
    try {
        Region r;
        const std::string fam = doc.value("family", std::string("custom"));
        if (auto f = parse_family(fam)) {
            const json& p = doc.at("params");
            RegionSpec s;
            s.family = *f;
            switch (*f) {
            case Family::P: case Family::Pp:
                s.a = int_field(p, "a"), s.b = int_field(p, "b"), s.c = int_field(p, "c");
                break;
            case Family::Q: case Family::Qp: case Family::K: case Family::Kp:
                s.seq = seq_field(p, "t");
                break;
            default:
                s.x = int_field(p, "x"), s.y = int_field(p, "y"), s.z = int_field(p, "z");
                s.seq = seq_field(p, "holes");
                break;
            }
            r.spec = s;
        } else if (fam != "custom") {
            throw ParseError("unknown family '" + fam + "'");
        }
        for (const auto& jc : doc.at("cells")) {
            Cell c = cell_from(jc);
            if (jc.size() >= 3) {
                const std::string o = jc[2].get<std::string>();
                if ((o == "U") != c.up() || (o != "U" && o != "D"))
                    throw ParseError("orientation of cell [" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                     "] does not match its parity");
            }
            r.cells.insert(c);
        }
        if (doc.contains("weights"))
            for (const auto& jw : doc["weights"]) {
                if (!jw.is_array() || jw.size() != 4) throw ParseError("weight must be [cellA, cellB, num, den]");
                Integer den = integer_from(jw[3]);
                if (den == 0) throw ParseError("zero weight denominator");
                Rational w(integer_from(jw[2]), den);
                w.canonicalize();
                r.set_weight(cell_from(jw[0]), cell_from(jw[1]), w);
            }
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("region JSON: ") + e.what());
    } catch (const json::exception& e) {
        throw ParseError(std::string("region JSON: ") + e.what());
    }
}

} // namespace rhombil
