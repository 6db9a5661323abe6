#include "stab/io.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace stab {

using nlohmann::json;

namespace {

std::string rat_str(const json& j, const std::string& where) {
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_string()) return j.get<std::string>();
    throw ParseError(where + ": expected a rational as string or integer");
}

Rat get_rat(const json& j, const std::string& where) {
    try {
        return parse_rational(rat_str(j, where));
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

ExtRat get_ext(const json& j, const std::string& where) {
    try {
        return parse_extended(rat_str(j, where));
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

const json& field(const json& j, const char* name, const std::string& where) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
    return *it;
}

bool flag_open(const json& j, const std::string& where) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "open") return true;
        if (s == "closed") return false;
    }
    throw ParseError(where + ": boundary flag must be \"open\" or \"closed\"");
}

DecoratedValue parse_endpoint(const json& value, const json& flag, bool is_min,
                              const std::string& where) {
    ExtRat v = get_ext(value, where);
    bool open = flag_open(flag, where);
    // min: open -> plus, closed -> minus; max: open -> minus, closed -> plus
    Dec d = is_min ? (open ? Dec::plus : Dec::minus) : (open ? Dec::minus : Dec::plus);
    try {
        return dv(std::move(v), d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Interval parse_interval(const json& rec, Kind kind, int dim, const std::string& where) {
    try {
        if (kind == Kind::rectangle) {
            const json& mins = field(rec, "min", where);
            const json& maxs = field(rec, "max", where);
            const json& mflags = field(rec, "min_flags", where);
            const json& xflags = field(rec, "max_flags", where);
            if (!mins.is_array() || static_cast<int>(mins.size()) != dim ||
                !maxs.is_array() || static_cast<int>(maxs.size()) != dim ||
                !mflags.is_array() || static_cast<int>(mflags.size()) != dim ||
                !xflags.is_array() || static_cast<int>(xflags.size()) != dim)
                throw ParseError(where + ": min/max/flags must be arrays of length dim");
            DecoratedPoint lo, hi;
            for (int i = 0; i < dim; ++i) {
                std::string at = where + ", coordinate " + std::to_string(i);
                lo.push_back(parse_endpoint(mins[i], mflags[i], true, at));
                hi.push_back(parse_endpoint(maxs[i], xflags[i], false, at));
            }
            return make_rectangle(std::move(lo), std::move(hi));
        }
        if (kind == Kind::free_interval) {
            const json& mins = field(rec, "min", where);
            if (!mins.is_array() || static_cast<int>(mins.size()) != dim)
                throw ParseError(where + ": min must be an array of length dim");
            std::vector<Rat> lo;
            for (int i = 0; i < dim; ++i)
                lo.push_back(get_rat(mins[i], where + ", coordinate " + std::to_string(i)));
            return make_free(std::move(lo));
        }
        const json& maxs = field(rec, "max", where);
        if (!maxs.is_array() || maxs.size() != 2)
            throw ParseError(where + ": triangle max must be a pair");
        return make_triangle(get_ext(maxs[0], where + ", coordinate 0"),
                             get_ext(maxs[1], where + ", coordinate 1"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace

Barcode parse_barcode(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    std::string kind_s = field(doc, "kind", "document").get<std::string>();
    Kind kind;
    if (kind_s == "rectangle")
        kind = Kind::rectangle;
    else if (kind_s == "free")
        kind = Kind::free_interval;
    else if (kind_s == "triangle")
        kind = Kind::triangle;
    else
        throw ParseError("kind must be one of rectangle, free, triangle");
    const json& dim_j = field(doc, "dim", "document");
    if (!dim_j.is_number_integer() || dim_j.get<int>() < 1)
        throw ParseError("dim must be a positive integer");
    int dim = dim_j.get<int>();
    if (kind == Kind::triangle && dim != 2) throw ParseError("triangle barcodes have dim 2");

    const json& recs = field(doc, "intervals", "document");
    if (!recs.is_array()) throw ParseError("intervals must be an array");
    std::vector<std::pair<std::string, Interval>> intervals;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        std::string where = "interval " + std::to_string(i);
        const json& rec = recs[i];
        if (!rec.is_object()) throw ParseError(where + ": expected an object");
        const json& id_j = field(rec, "id", where);
        if (!id_j.is_string()) throw ParseError(where + ": id must be a string");
        std::string id = id_j.get<std::string>();
        intervals.emplace_back(id, parse_interval(rec, kind, dim, where + " '" + id + "'"));
    }
    try {
        return make_barcode(kind, dim, std::move(intervals));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

namespace {

json ext_json(const ExtRat& v) { return v.str(); }

json interval_json(const std::string& id, const Interval& I) {
    json rec;
    rec["id"] = id;
    if (auto* r = std::get_if<Rectangle>(&I)) {
        json mins = json::array(), maxs = json::array();
        json mflags = json::array(), xflags = json::array();
        for (std::size_t i = 0; i < r->min.size(); ++i) {
            mins.push_back(ext_json(r->min[i].value));
            maxs.push_back(ext_json(r->max[i].value));
            mflags.push_back(r->min[i].dec == Dec::plus ? "open" : "closed");
            xflags.push_back(r->max[i].dec == Dec::minus ? "open" : "closed");
        }
        rec["min"] = mins;
        rec["max"] = maxs;
        rec["min_flags"] = mflags;
        rec["max_flags"] = xflags;
    } else if (auto* f = std::get_if<FreeInterval>(&I)) {
        json mins = json::array();
        for (const Rat& x : f->min) mins.push_back(to_string(x));
        rec["min"] = mins;
    } else {
        const auto& t = std::get<Triangle>(I);
        rec["max"] = json::array({ext_json(t.a), ext_json(t.b)});
    }
    return rec;
}

}  // namespace

std::string emit_barcode(const Barcode& b) {
    json doc;
    switch (b.kind) {
    case Kind::rectangle: doc["kind"] = "rectangle"; break;
    case Kind::free_interval: doc["kind"] = "free"; break;
    case Kind::triangle: doc["kind"] = "triangle"; break;
    }
    doc["dim"] = b.dim;
    json recs = json::array();
    for (const auto& [id, I] : b.intervals) recs.push_back(interval_json(id, I));
    doc["intervals"] = recs;
    return doc.dump(2) + "\n";
}

WeightMatrix parse_witness(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    WeightMatrix w;
    w.delta = get_rat(field(doc, "delta", "document"), "delta");
    if (w.delta < 0) throw ParseError("delta must be nonnegative");
    for (const char* part : {"f", "g"}) {
        const json& entries = field(doc, part, "document");
        if (!entries.is_array())
            throw ParseError(std::string(part) + " must be an array of entries");
        auto& target = *part == 'f' ? w.f : w.g;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::string where = std::string(part) + " entry " + std::to_string(i);
            const json& e = entries[i];
            if (!e.is_object()) throw ParseError(where + ": expected an object");
            const json& from = field(e, "from", where);
            const json& to = field(e, "to", where);
            if (!from.is_string() || !to.is_string())
                throw ParseError(where + ": from/to must be id strings");
            Rat weight = get_rat(field(e, "weight", where), where + " weight");
            if (weight == 0) throw ParseError(where + ": weight must be nonzero");
            auto key = std::make_pair(from.get<std::string>(), to.get<std::string>());
            if (!target.emplace(key, weight).second)
                throw ParseError(where + ": duplicate entry (" + key.first + ", " +
                                 key.second + ")");
        }
    }
    return w;
}

std::string emit_witness(const WeightMatrix& w) {
    json doc;
    doc["delta"] = to_string(w.delta);
    for (const char* part : {"f", "g"}) {
        json entries = json::array();
        for (const auto& [key, weight] : (*part == 'f' ? w.f : w.g))
            entries.push_back({{"from", key.first},
                               {"to", key.second},
                               {"weight", to_string(weight)}});
        doc[part] = entries;
    }
    return doc.dump(2) + "\n";
}

namespace {

double approx(const Rat& r) { return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r)); }

}  // namespace

std::string render_svg(const Barcode& b) {
    if (b.dim != 2) throw std::invalid_argument("render_svg draws 2-dimensional barcodes");
    // view box from the finite endpoints, with a margin for unbounded regions
    double lo = -1, hi = 1;
    bool seen = false;
    auto note = [&](const ExtRat& v) {
        if (!v.finite()) return;
        double x = approx(v.value());
        if (!seen) {
            lo = hi = x;
            seen = true;
        } else {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    };
    for (const auto& [id, I] : b.intervals) {
        if (auto* r = std::get_if<Rectangle>(&I)) {
            for (const auto& c : r->min) note(c.value);
            for (const auto& c : r->max) note(c.value);
        } else if (auto* f = std::get_if<FreeInterval>(&I)) {
            for (const Rat& x : f->min) note(ExtRat(x));
        } else {
            const auto& t = std::get<Triangle>(I);
            note(t.a);
            note(t.b);
            note(ExtRat(0));
        }
    }
    double margin = std::max(1.0, (hi - lo) * 0.2);
    lo -= margin;
    hi += margin;
    double span = hi - lo;
    double scale = 400.0 / span;
    // SVG y grows downward; flip so larger coordinates are drawn higher.
    auto sx = [&](double x) { return (x - lo) * scale; };
    auto sy = [&](double y) { return (hi - y) * scale; };
    auto clamp = [&](const ExtRat& v, bool is_min) {
        if (v.is_neg_inf()) return lo;
        if (v.is_pos_inf()) return hi;
        (void)is_min;
        return std::max(lo, std::min(hi, approx(v.value())));
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
        << "viewBox=\"0 0 400 400\">\n";
    int hue = 0;
    for (const auto& [id, I] : b.intervals) {
        std::string style = "fill=\"hsl(" + std::to_string(hue) +
                            ",70%,60%)\" fill-opacity=\"0.4\" stroke=\"hsl(" +
                            std::to_string(hue) + ",70%,35%)\"";
        hue = (hue + 67) % 360;
        if (auto* r = std::get_if<Rectangle>(&I)) {
            double x0 = clamp(r->min[0].value, true), x1 = clamp(r->max[0].value, false);
            double y0 = clamp(r->min[1].value, true), y1 = clamp(r->max[1].value, false);
            out << "  <rect data-id=\"" << id << "\" x=\"" << sx(x0) << "\" y=\"" << sy(y1)
                << "\" width=\"" << (x1 - x0) * scale << "\" height=\"" << (y1 - y0) * scale
                << "\" " << style << "/>\n";
        } else if (auto* f = std::get_if<FreeInterval>(&I)) {
            double x0 = std::max(lo, std::min(hi, approx(f->min[0])));
            double y0 = std::max(lo, std::min(hi, approx(f->min[1])));
            out << "  <rect data-id=\"" << id << "\" x=\"" << sx(x0) << "\" y=\"" << sy(hi)
                << "\" width=\"" << (hi - x0) * scale << "\" height=\"" << (hi - y0) * scale
                << "\" " << style << "/>\n";
        } else {
            const auto& t = std::get<Triangle>(I);
            double a = clamp(t.a, false), bb = clamp(t.b, false);
            // region x < a, y < b, x + y >= 0 clipped to the view box
            out << "  <polygon data-id=\"" << id << "\" points=\"" << sx(a) << "," << sy(bb)
                << " " << sx(a) << "," << sy(std::max(lo, -a)) << " "
                << sx(std::max(lo, -bb)) << "," << sy(bb) << "\" " << style << "/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace stab
