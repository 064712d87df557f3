#include "confspace/manifold.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace confspace {

namespace {

std::string describe(const ManifoldData& m, ClassId id)
{
    const auto& c = m.at(id);
    std::ostringstream os;
    os << c.label << "[twist " << static_cast<int>(id.twist) << ", deg " << c.deg << "]";
    return os.str();
}

void add_into(Combination& acc, const Combination& x, const Rational& scale)
{
    for (const auto& [i, c] : x) {
        auto& slot = acc[i];
        slot += scale * c;
        if (slot == 0)
            acc.erase(i);
    }
}

std::vector<ClassId> all_classes(const ManifoldData& m)
{
    std::vector<ClassId> out;
    for (int t = 0; t < 2; ++t)
        for (size_t i = 0; i < m.hc[t].size(); ++i)
            out.push_back({static_cast<Twist>(t), i});
    return out;
}

// Collects basis classes and cup entries, then sorts classes by degree and
// fills in graded-commutative partners.
class Assembler {
public:
    Assembler(std::string name, int dim, bool orientable)
    {
        m_.name = std::move(name);
        m_.dim = dim;
        m_.orientable = orientable;
    }

    void add_class(Twist t, int deg, std::string label)
    {
        raw_[static_cast<int>(t)].push_back({deg, std::move(label)});
    }

    struct Term {
        std::string label;
        Rational coeff;
    };
    struct Entry {
        Twist tx;
        int dx;
        std::string x;
        Twist ty;
        int dy;
        std::string y;
        std::vector<Term> result;
    };

    void add_cup(Entry e) { entries_.push_back(std::move(e)); }

    void set_fundamental(Twist t, int deg, std::string label)
    {
        fundamental_ = {t, deg, std::move(label)};
        has_fundamental_ = true;
    }

    ManifoldData finish()
    {
        if (m_.dim < 1)
            throw ValidationError("dimension must be positive");
        if (m_.orientable) {
            if (raw_[1].empty())
                raw_[1] = raw_[0];
            else if (raw_[0].empty())
                raw_[0] = raw_[1];
        }
        for (int t = 0; t < 2; ++t) {
            auto v = raw_[t];
            std::stable_sort(v.begin(), v.end(), [](const BasisClass& a, const BasisClass& b) { return a.deg < b.deg; });
            m_.hc[t] = std::move(v);
        }

        for (const auto& e : entries_) {
            if (m_.orientable) {
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        insert(e, static_cast<Twist>(a), static_cast<Twist>(b));
            } else {
                insert(e, e.tx, e.ty);
            }
        }
        fill_partners();

        if (!has_fundamental_)
            throw ValidationError("missing fundamental class");
        auto [ft, fd, fl] = fundamental_;
        if (m_.orientable)
            ft = Twist::twisted;
        m_.fundamental_class = m_.find(ft, fd, fl);
        return std::move(m_);
    }

private:
    void store(ClassId x, ClassId y, const Combination& value)
    {
        auto key = std::make_pair(x, y);
        auto it = m_.cup_table.find(key);
        if (it != m_.cup_table.end() && it->second != value)
            throw ValidationError("conflicting cup entries for (" + describe(m_, x) + ", " + describe(m_, y) + ")");
        if (!value.empty())
            m_.cup_table[key] = value;
        else if (it == m_.cup_table.end())
            explicit_zero_.insert(key);
    }

    void insert(const Entry& e, Twist tx, Twist ty)
    {
        const ClassId x = m_.find(tx, e.dx, e.x);
        const ClassId y = m_.find(ty, e.dy, e.y);
        const Twist tr = tx + ty;
        Combination value;
        for (const auto& term : e.result) {
            const auto& cls = m_.classes(tr);
            auto it = std::find_if(cls.begin(), cls.end(), [&](const BasisClass& c) { return c.label == term.label; });
            if (it == cls.end())
                throw InputError("unknown result label '" + term.label + "' in twist " +
                                 std::to_string(static_cast<int>(tr)));
            const size_t idx = static_cast<size_t>(it - cls.begin());
            value[idx] += term.coeff;
            if (value[idx] == 0)
                value.erase(idx);
        }
        store(x, y, value);
    }

    // graded commutativity supplies (y, x) when only (x, y) was given
    void fill_partners()
    {
        auto table = m_.cup_table;
        for (const auto& [key, value] : table) {
            const auto [x, y] = key;
            auto pkey = std::make_pair(y, x);
            if (m_.cup_table.contains(pkey) || explicit_zero_.contains(pkey))
                continue;
            const int sign = (m_.degree(x) * m_.degree(y)) % 2 == 0 ? 1 : -1;
            Combination partner;
            for (const auto& [i, c] : value)
                partner[i] = sign * c;
            m_.cup_table[pkey] = partner;
        }
    }

    ManifoldData m_;
    std::array<std::vector<BasisClass>, 2> raw_;
    std::vector<Entry> entries_;
    std::tuple<Twist, int, std::string> fundamental_{Twist::twisted, 0, ""};
    bool has_fundamental_ = false;
    std::set<std::pair<ClassId, ClassId>> explicit_zero_;
};

int parse_int_param(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw InputError("invalid builtin parameter '" + std::string(s) + "'");
    return v;
}

} // namespace

int ManifoldData::hc_dim(Twist t, int q) const
{
    const auto& cls = classes(t);
    return static_cast<int>(std::count_if(cls.begin(), cls.end(), [q](const BasisClass& c) { return c.deg == q; }));
}

Combination ManifoldData::cup(ClassId x, ClassId y) const
{
    auto it = cup_table.find({x, y});
    return it == cup_table.end() ? Combination{} : it->second;
}

Combination ManifoldData::cup(Twist a, const Combination& x, Twist b, const Combination& y) const
{
    Combination out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y)
            add_into(out, cup({a, i}, {b, j}), ci * cj);
    return out;
}

ClassId ManifoldData::find(Twist t, int deg, std::string_view label) const
{
    const auto& cls = classes(t);
    for (size_t i = 0; i < cls.size(); ++i)
        if (cls[i].deg == deg && cls[i].label == label)
            return {t, i};
    throw InputError("unknown class '" + std::string(label) + "' (twist " + std::to_string(static_cast<int>(t)) +
                     ", deg " + std::to_string(deg) + ")");
}

void validate(const ManifoldData& m)
{
    const int d = m.dim;
    if (d < 1)
        throw ValidationError("dimension must be positive");

    for (int t = 0; t < 2; ++t) {
        std::set<std::string> seen;
        int prev = -1;
        for (const auto& c : m.hc[t]) {
            if (c.deg < 0 || c.deg > d)
                throw ValidationError("class " + c.label + " has degree " + std::to_string(c.deg) + " outside [0, " +
                                      std::to_string(d) + "]");
            if (c.deg < prev)
                throw ValidationError("classes of twist " + std::to_string(t) + " not sorted by degree");
            prev = c.deg;
            if (!seen.insert(c.label).second)
                throw ValidationError("duplicate label " + c.label + " in twist " + std::to_string(t));
        }
    }

    if (m.hc_dim(Twist::twisted, d) != 1)
        throw ValidationError("not connected: dim H_c^d(M; Q^w1) = " + std::to_string(m.hc_dim(Twist::twisted, d)) +
                              ", expected 1");
    if (m.fundamental_class.twist != Twist::twisted || m.fundamental_class.index >= m.hc[1].size() ||
        m.degree(m.fundamental_class) != d)
        throw ValidationError("fundamental class must be the twisted class of degree d");

    if (m.orientable) {
        const auto& a = m.hc[0];
        const auto& b = m.hc[1];
        bool same = a.size() == b.size();
        for (size_t i = 0; same && i < a.size(); ++i)
            same = a[i].deg == b[i].deg && a[i].label == b[i].label;
        if (!same)
            throw ValidationError("orientable manifold with differing twisted and untwisted classes");
    }

    for (const auto& [key, value] : m.cup_table) {
        const auto [x, y] = key;
        if (x.index >= m.classes(x.twist).size() || y.index >= m.classes(y.twist).size())
            throw ValidationError("cup table refers to a missing class");
        const Twist tr = x.twist + y.twist;
        const int deg = m.degree(x) + m.degree(y);
        for (const auto& [i, c] : value) {
            if (c == 0)
                throw ValidationError("stored zero coefficient in cup table");
            if (i >= m.classes(tr).size())
                throw ValidationError("cup result index out of range");
            if (deg > d)
                throw ValidationError("cup product (" + describe(m, x) + ", " + describe(m, y) + ") lands in degree " +
                                      std::to_string(deg) + " > d");
            if (m.classes(tr)[i].deg != deg)
                throw ValidationError("cup product (" + describe(m, x) + ", " + describe(m, y) +
                                      ") has a component of the wrong degree");
        }
    }

    const auto ids = all_classes(m);
    for (auto x : ids)
        for (auto y : ids) {
            const int sign = (m.degree(x) * m.degree(y)) % 2 == 0 ? 1 : -1;
            Combination xy = m.cup(x, y);
            Combination yx = m.cup(y, x);
            Combination diff = xy;
            add_into(diff, yx, Rational(-sign));
            if (!diff.empty())
                throw ValidationError("cup not graded-commutative at (" + describe(m, x) + ", " + describe(m, y) + ")");
            if (m.orientable) {
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) {
                        ClassId xa{static_cast<Twist>(a), x.index};
                        ClassId yb{static_cast<Twist>(b), y.index};
                        if (m.cup(xa, yb) != xy)
                            throw ValidationError("orientable manifold with twist-dependent cup product at (" +
                                                  describe(m, x) + ", " + describe(m, y) + ")");
                    }
            }
        }

    for (auto x : ids)
        for (auto y : ids)
            for (auto z : ids) {
                const Twist txy = x.twist + y.twist;
                const Twist tyz = y.twist + z.twist;
                auto left = m.cup(txy, m.cup(x, y), z.twist, Combination{{z.index, 1}});
                auto right = m.cup(x.twist, Combination{{x.index, 1}}, tyz, m.cup(y, z));
                if (left != right)
                    throw ValidationError("cup not associative at (" + describe(m, x) + ", " + describe(m, y) + ", " +
                                          describe(m, z) + ")");
            }
}

ManifoldData load_manifold(std::string_view document)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("parse error: ") + e.what());
    }

    auto class_ref = [](const json& j) {
        return std::make_tuple(twist_of(j.at("twist").get<int>()), j.at("deg").get<int>(), j.at("label").get<std::string>());
    };

    try {
        Assembler as(doc.at("name").get<std::string>(), doc.at("dim").get<int>(), doc.at("orientable").get<bool>());
        const auto& hc = doc.at("hc");
        for (const char* key : {"0", "1"}) {
            if (!hc.contains(key))
                continue;
            const Twist t = key[0] == '0' ? Twist::untwisted : Twist::twisted;
            for (const auto& group : hc.at(key))
                for (const auto& label : group.at("labels"))
                    as.add_class(t, group.at("deg").get<int>(), label.get<std::string>());
        }
        if (doc.contains("cup")) {
            for (const auto& entry : doc.at("cup")) {
                auto [tx, dx, x] = class_ref(entry.at("x"));
                auto [ty, dy, y] = class_ref(entry.at("y"));
                std::vector<Assembler::Term> terms;
                for (const auto& r : entry.at("result"))
                    terms.push_back({r.at("label").get<std::string>(), parse_rational(r.at("coeff").get<std::string>())});
                as.add_cup({tx, dx, x, ty, dy, y, std::move(terms)});
            }
        }
        auto [ft, fd, fl] = class_ref(doc.at("fundamental_class"));
        as.set_fundamental(ft, fd, fl);
        ManifoldData m = as.finish();
        validate(m);
        return m;
    } catch (const json::exception& e) {
        throw InputError(std::string("parse error: ") + e.what());
    }
}

std::vector<int> ordinary_betti(const ManifoldData& m, Twist twist)
{
    std::vector<int> out(m.dim + 1, 0);
    const Twist dual = twist + Twist::twisted;
    for (int q = 0; q <= m.dim; ++q)
        out[q] = m.hc_dim(dual, m.dim - q);
    return out;
}

long euler_char(const ManifoldData& m, Twist twist)
{
    long chi = 0;
    const auto b = ordinary_betti(m, twist);
    for (size_t q = 0; q < b.size(); ++q)
        chi += (q % 2 == 0 ? 1 : -1) * b[q];
    return chi;
}

ManifoldData builtin(std::string_view name, int param)
{
    const auto tw = Twist::twisted;
    if (name == "euclidean") {
        if (param < 1)
            throw InputError("euclidean(d) needs d >= 1");
        Assembler as("euclidean(" + std::to_string(param) + ")", param, true);
        as.add_class(tw, param, "mu");
        as.set_fundamental(tw, param, "mu");
        auto m = as.finish();
        validate(m);
        return m;
    }
    if (name == "sphere") {
        if (param < 1)
            throw InputError("sphere(d) needs d >= 1");
        const int d = param;
        Assembler as("sphere(" + std::to_string(d) + ")", d, true);
        as.add_class(tw, 0, "1");
        as.add_class(tw, d, "mu");
        as.add_cup({tw, 0, "1", tw, 0, "1", {{"1", 1}}});
        as.add_cup({tw, 0, "1", tw, d, "mu", {{"mu", 1}}});
        as.set_fundamental(tw, d, "mu");
        auto m = as.finish();
        validate(m);
        return m;
    }
    if (name == "punctured_surface" || name == "closed_surface") {
        if (param < 0)
            throw InputError(std::string(name) + "(g) needs g >= 0");
        const int g = param;
        const bool closed = name == "closed_surface";
        Assembler as(std::string(name) + "(" + std::to_string(g) + ")", 2, true);
        if (closed)
            as.add_class(tw, 0, "1");
        for (int i = 1; i <= g; ++i) {
            as.add_class(tw, 1, "a" + std::to_string(i));
            as.add_class(tw, 1, "b" + std::to_string(i));
        }
        as.add_class(tw, 2, "mu");
        for (int i = 1; i <= g; ++i) {
            const auto a = "a" + std::to_string(i);
            const auto b = "b" + std::to_string(i);
            as.add_cup({tw, 1, a, tw, 1, b, {{"mu", 1}}});
            if (closed) {
                as.add_cup({tw, 0, "1", tw, 1, a, {{a, 1}}});
                as.add_cup({tw, 0, "1", tw, 1, b, {{b, 1}}});
            }
        }
        if (closed) {
            as.add_cup({tw, 0, "1", tw, 0, "1", {{"1", 1}}});
            as.add_cup({tw, 0, "1", tw, 2, "mu", {{"mu", 1}}});
        }
        as.set_fundamental(tw, 2, "mu");
        auto m = as.finish();
        validate(m);
        return m;
    }
    if (name == "moebius") {
        Assembler as("moebius", 2, false);
        as.add_class(tw, 1, "a");
        as.add_class(tw, 2, "mu");
        as.set_fundamental(tw, 2, "mu");
        auto m = as.finish();
        validate(m);
        return m;
    }
    throw InputError("unknown builtin manifold '" + std::string(name) + "'");
}

ManifoldData builtin_from_spec(std::string_view spec)
{
    const auto colon = spec.find(':');
    const auto name = spec.substr(0, colon);
    if (colon == std::string_view::npos) {
        if (name != "moebius")
            throw InputError("builtin '" + std::string(name) + "' needs a parameter");
        return builtin(name);
    }
    return builtin(name, parse_int_param(spec.substr(colon + 1)));
}

std::vector<std::string> builtin_names()
{
    return {"euclidean", "sphere", "punctured_surface", "closed_surface", "moebius"};
}

} // namespace confspace
