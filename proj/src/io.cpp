#include "prufer/io.hpp"

#include <fstream>
#include <sstream>

namespace prufer {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

QuadExt parse_coord(const std::string& raw, int quad_d, int line_no) {
    std::string t;
    for (char ch : raw)
        if (ch != ' ' && ch != '*') t += ch;
    if (t.empty()) throw ParseError(line_no, "empty coordinate");
    if (t.back() != 'r') {
        auto v = parse_rat(t);
        if (!v) throw ParseError(line_no, "bad rational: " + raw);
        return QuadExt(*v);
    }
    std::string body = t.substr(0, t.size() - 1);
    // split "a+b" / "a-b" at the last sign that is not a leading sign
    std::size_t cut_pos = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/' && body[i - 1] != '+' &&
            body[i - 1] != '-') {
            cut_pos = i;
            break;
        }
    }
    Rat a(0), b(1);
    std::string bpart = body;
    if (cut_pos != std::string::npos) {
        std::string apart = body.substr(0, cut_pos);
        bpart = body.substr(cut_pos);  // keeps the sign
        auto av = parse_rat(apart);
        if (!av) throw ParseError(line_no, "bad rational part: " + raw);
        a = *av;
    }
    if (bpart.empty() || bpart == "+") {
        b = 1;
    } else if (bpart == "-") {
        b = -1;
    } else {
        auto bv = parse_rat(bpart);
        if (!bv) throw ParseError(line_no, "bad radical coefficient: " + raw);
        b = *bv;
    }
    return QuadExt(a, b, quad_d);
}

}  // namespace

Cut parse_cut(const std::string& text, int quad_d, int line_no) {
    auto ws = words(text);
    if (ws.size() < 2) throw ParseError(line_no, "cut needs a flag and a boundary");
    bool attained;
    if (ws[0] == "attained")
        attained = true;
    else if (ws[0] == "open")
        attained = false;
    else
        throw ParseError(line_no, "cut flag must be 'attained' or 'open'");
    std::string rest;
    for (std::size_t i = 1; i < ws.size(); ++i) rest += (i > 1 ? " " : "") + ws[i];
    auto coords = split(rest, ',');
    Cut c;
    c.attained = attained;
    for (const auto& coord : coords) {
        if (coord == "minus_inf") {
            if (&coord != &coords.back()) throw ParseError(line_no, "minus_inf must be last");
            c.minus_inf = true;
        } else {
            c.boundary.push_back(parse_coord(coord, quad_d, line_no));
        }
    }
    if (c.boundary.empty()) throw ParseError(line_no, "cut needs at least one coordinate");
    return c;
}

std::string cut_to_text(const Cut& c) { return c.to_string(); }

namespace {

Monomial parse_monomial(const FamilyPresentation& p, const std::vector<std::string>& tokens,
                        std::size_t from, std::size_t to, int line_no) {
    Monomial m;
    for (std::size_t i = from; i < to; ++i) {
        // token: FAM:X3^2 or FAM:T0 or FAM:T0^-1
        auto colon = tokens[i].find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "symbol needs family prefix");
        int fam = p.family_index(tokens[i].substr(0, colon));
        std::string sym = tokens[i].substr(colon + 1);
        if (sym.empty() || (sym[0] != 'X' && sym[0] != 'T'))
            throw ParseError(line_no, "symbol must be X<i> or T<k>");
        bool is_x = sym[0] == 'X';
        std::string idx = sym.substr(1);
        long long e = 1;
        auto caret = idx.find('^');
        if (caret != std::string::npos) {
            e = std::stoll(idx.substr(caret + 1));
            idx = idx.substr(0, caret);
        }
        int index = std::stoi(idx);
        if (is_x)
            m.mul_x(fam, index, e);
        else
            m.mul_xt(fam, index, e);
    }
    return m;
}

AdGenerator parse_generator(const FamilyPresentation& p, const std::string& text, int line_no) {
    auto ws = words(text);
    if (ws.empty()) throw ParseError(line_no, "empty generator");
    if (ws[0] == "monomial") {
        return parse_monomial(p, ws, 1, ws.size(), line_no);
    }
    if (ws[0] == "pattern") {
        // pattern FAM start a step s exp e
        if (ws.size() != 8 || ws[2] != "start" || ws[4] != "step" || ws[6] != "exp")
            throw ParseError(line_no, "pattern FAM start <a> step <s> exp <e>");
        PatternGen g;
        g.family = p.family_index(ws[1]);
        g.start = std::stoi(ws[3]);
        g.step = std::stoi(ws[5]);
        g.exponent = std::stoll(ws[7]);
        return g;
    }
    if (ws[0] == "trace") {
        if (ws.size() != 3) throw ParseError(line_no, "trace FAM <value>");
        auto v = parse_rat(ws[2]);
        if (!v) throw ParseError(line_no, "bad trace value");
        return LimitTraceGen{p.family_index(ws[1]), *v};
    }
    if (ws[0] == "scaled") {
        // scaled <symbols...> powers FAM^e FAM^e ...
        ScaledTermGen g;
        std::size_t i = 1;
        while (i < ws.size() && ws[i] != "powers") ++i;
        g.base = parse_monomial(p, ws, 1, i, line_no);
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            auto caret = ws[j].find('^');
            if (caret == std::string::npos) throw ParseError(line_no, "powers need FAM^e");
            g.limit_powers[p.family_index(ws[j].substr(0, caret))] =
                std::stoll(ws[j].substr(caret + 1));
        }
        return g;
    }
    throw ParseError(line_no, "unknown generator kind: " + ws[0]);
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    enum class Kind { Unset, Finite, Fam } kind = Kind::Unset;
    DomainPresentation dp;
    FamilyPresentation fp;
    std::vector<std::pair<std::pair<int, std::string>, std::string>> ideal_lines;

    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto ws = words(t);
        const std::string& key = ws[0];
        if (key == "kind") {
            if (ws.size() != 2) throw ParseError(line_no, "kind finite|family");
            if (ws[1] == "finite")
                kind = Kind::Finite;
            else if (ws[1] == "family")
                kind = Kind::Fam;
            else
                throw ParseError(line_no, "kind must be finite or family");
        } else if (key == "quad_d") {
            if (ws.size() != 2) throw ParseError(line_no, "quad_d <n>");
            dp.quad_d = std::stoi(ws[1]);
        } else if (key == "trunc_k") {
            if (ws.size() != 2) throw ParseError(line_no, "trunc_k <n>");
            fp.truncation = std::stoi(ws[1]);
        } else if (key == "slot") {
            if (kind != Kind::Finite) throw ParseError(line_no, "slot outside a finite file");
            if (ws.size() != 3 && ws.size() != 4) throw ParseError(line_no, "slot NAME Z|Q [Z|Q]");
            auto tag = [&](const std::string& s) {
                if (s == "Z") return LevelTag::Z;
                if (s == "Q") return LevelTag::Q;
                throw ParseError(line_no, "level tag must be Z or Q");
            };
            ValueGroup g = ws.size() == 3 ? ValueGroup(tag(ws[2]))
                                          : ValueGroup(tag(ws[2]), tag(ws[3]));
            if (!dp.slots.emplace(ws[1], g).second)
                throw ParseError(line_no, "duplicate slot " + ws[1]);
        } else if (key == "shared_prime") {
            if (kind != Kind::Finite) throw ParseError(line_no, "shared_prime outside finite file");
            if (ws.size() < 4) throw ParseError(line_no, "shared_prime NAME M1 M2 ...");
            SharedPrime sp;
            sp.prime_id = ws[1];
            for (std::size_t i = 2; i < ws.size(); ++i) sp.members.insert(ws[i]);
            dp.shared_primes.push_back(std::move(sp));
        } else if (key == "family") {
            if (kind != Kind::Fam) throw ParseError(line_no, "family outside a family file");
            if (ws.size() != 3) throw ParseError(line_no, "family NAME unit_steps|dyadic_steps");
            FamilyKind fk;
            if (ws[2] == "unit_steps")
                fk = FamilyKind::UnitSteps;
            else if (ws[2] == "dyadic_steps")
                fk = FamilyKind::DyadicSteps;
            else
                throw ParseError(line_no, "family kind must be unit_steps or dyadic_steps");
            fp.families.push_back({ws[1], fk});
        } else if (key == "ideal") {
            auto eq = t.find('=');
            if (eq == std::string::npos || ws.size() < 3 || ws[2] != "=")
                throw ParseError(line_no, "ideal NAME = ...");
            ideal_lines.push_back({{line_no, ws[1]}, trim(t.substr(eq + 1))});
        } else {
            throw ParseError(line_no, "unknown directive: " + key);
        }
    }

    if (kind == Kind::Unset) throw ParseError(1, "missing 'kind' directive");
    PresentationFile out;
    if (kind == Kind::Finite) {
        try {
            dp.validate();
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
        out.presentation = dp;
        for (const auto& [where, body] : ideal_lines) {
            auto [lno, name] = where;
            GlobalIdeal ideal;
            if (body.empty()) {  // the unit ideal
                out.ideals.emplace(name, std::move(ideal));
                continue;
            }
            for (const auto& part : split(body, ';')) {
                auto colon = part.find(':');
                if (colon == std::string::npos)
                    throw ParseError(lno, "ideal entries look like SLOT: <cut>");
                std::string slot = trim(part.substr(0, colon));
                if (!dp.slots.count(slot)) throw ParseError(lno, "unknown slot " + slot);
                Cut c = parse_cut(trim(part.substr(colon + 1)), dp.quad_d, lno);
                ideal.locals.emplace(slot, std::move(c));
            }
            try {
                out.ideals.emplace(name, normalize_ideal(dp, std::move(ideal)));
            } catch (const Error& e) {
                throw ParseError(lno, e.what());
            }
        }
    } else {
        try {
            fp.validate();
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
        out.presentation = fp;
        for (const auto& [where, body] : ideal_lines) {
            auto [lno, name] = where;
            ADIdeal ideal;
            for (const auto& part : split(body, '|'))
                ideal.generators.push_back(parse_generator(fp, part, lno));
            out.family_ideals.emplace(name, std::move(ideal));
        }
    }
    return out;
}

PresentationFile load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

namespace {

std::string generator_text(const FamilyPresentation& p, const AdGenerator& g) {
    auto monomial_text = [&](const Monomial& m) {
        std::string s;
        for (const auto& [key, e] : m.x) {
            s += " " + p.families[static_cast<std::size_t>(key.first)].name + ":X" +
                 std::to_string(key.second);
            if (e != 1) s += "^" + std::to_string(e);
        }
        for (const auto& [key, e] : m.xt) {
            s += " " + p.families[static_cast<std::size_t>(key.first)].name + ":T" +
                 std::to_string(key.second);
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    };
    if (const auto* m = std::get_if<Monomial>(&g)) return "monomial" + monomial_text(*m);
    if (const auto* pat = std::get_if<PatternGen>(&g))
        return "pattern " + p.families[static_cast<std::size_t>(pat->family)].name + " start " +
               std::to_string(pat->start) + " step " + std::to_string(pat->step) + " exp " +
               std::to_string(pat->exponent);
    if (const auto* tr = std::get_if<LimitTraceGen>(&g))
        return "trace " + p.families[static_cast<std::size_t>(tr->family)].name + " " +
               rat_to_string(tr->value);
    const auto& sc = std::get<ScaledTermGen>(g);
    std::string s = "scaled" + monomial_text(sc.base) + " powers";
    for (const auto& [fam, e] : sc.limit_powers)
        s += " " + p.families[static_cast<std::size_t>(fam)].name + "^" + std::to_string(e);
    return s;
}

}  // namespace

std::string serialize_presentation(const PresentationFile& f) {
    std::string out;
    if (f.is_finite()) {
        const DomainPresentation& d = f.finite();
        out += "kind finite\n";
        out += "quad_d " + std::to_string(d.quad_d) + "\n";
        for (const auto& [m, g] : d.slots) {
            out += "slot " + m;
            for (auto lv : g.levels) out += lv == LevelTag::Z ? " Z" : " Q";
            out += "\n";
        }
        for (const auto& sp : d.shared_primes) {
            out += "shared_prime " + sp.prime_id;
            for (const auto& m : sp.members) out += " " + m;
            out += "\n";
        }
        for (const auto& [name, ideal] : f.ideals) {
            out += "ideal " + name + " =";
            bool first = true;
            for (const auto& [m, c] : ideal.locals) {
                out += (first ? " " : " ; ") + m + ": " + cut_to_text(c);
                first = false;
            }
            if (first) out += " ";  // the unit ideal has no entries
            out += "\n";
        }
    } else {
        const FamilyPresentation& p = f.family();
        out += "kind family\n";
        out += "trunc_k " + std::to_string(p.truncation) + "\n";
        for (const auto& fam : p.families)
            out += "family " + fam.name +
                   (fam.kind == FamilyKind::UnitSteps ? " unit_steps\n" : " dyadic_steps\n");
        for (const auto& [name, ideal] : f.family_ideals) {
            out += "ideal " + name + " =";
            bool first = true;
            for (const auto& g : ideal.generators) {
                out += (first ? " " : " | ") + generator_text(p, g);
                first = false;
            }
            out += "\n";
        }
    }
    return out;
}

Json cut_json(const Cut& c) {
    Json j;
    j["flag"] = c.attained ? "attained" : "open";
    Json coords = Json::array();
    for (const auto& b : c.boundary) coords.push_back(b.to_string());
    if (c.minus_inf) coords.push_back("minus_inf");
    j["boundary"] = coords;
    return j;
}

Json ideal_json(const GlobalIdeal& i) {
    Json j = Json::object();
    for (const auto& [m, c] : i.locals) j[m] = cut_json(c);
    return j;
}

Json factorization_json(const Factorization& f) {
    Json j;
    j["divisorial_part"] = ideal_json(f.divisorial_part);
    j["factors"] = f.factors;
    j["certificate"] = {{"product_matches", f.certificate.product_matches},
                        {"irredundant", f.certificate.irredundant}};
    return j;
}

Json profile_json(const FamilyPresentation& p, const ValuationProfile& v) {
    Json j = Json::object();
    for (std::size_t f = 0; f < v.families.size(); ++f) {
        const auto& pf = v.families[f];
        Json fam;
        Json window = Json::array();
        for (const auto& w : pf.window) window.push_back(rat_to_string(w));
        fam["window"] = window;
        fam["tail_density"] = rat_to_string(pf.tail.density);
        Json per = Json::array();
        for (const auto& q : pf.tail.periodic) per.push_back(rat_to_string(q));
        fam["tail_periodic"] = per;
        fam["limit"] = {{"boundary", rat_to_string(pf.limit.boundary)},
                        {"attained", pf.limit.attained}};
        j[p.families[f].name] = fam;
    }
    return j;
}

Json weak_factorization_json(const FamilyPresentation& p, const WeakFactorization& w) {
    Json j;
    j["divisorial_part"] = profile_json(p, w.divisorial_part);
    Json e = Json::object();
    for (const auto& [fam, t] : w.exponents)
        e[p.families[static_cast<std::size_t>(fam)].name] = t;
    j["exponents"] = e;
    j["certificate"] = w.certificate_ok;
    j["principal_localizations_match"] = w.lemma_ok;
    return j;
}

Json fixture_json(const FixtureReport& r) {
    Json j;
    j["fixture"] = r.name;
    j["truncation"] = r.truncation;
    Json checks = Json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    j["checks"] = checks;
    j["all_pass"] = r.all_pass();
    return j;
}

std::string factorization_table(const Factorization& f) {
    std::string out = "divisorial part:\n";
    if (f.divisorial_part.locals.empty()) out += "  (unit ideal)\n";
    for (const auto& [m, c] : f.divisorial_part.locals)
        out += "  " + m + ": " + c.to_string() + "\n";
    out += "maximal factors:";
    if (f.factors.empty()) out += " (empty product)";
    for (const auto& m : f.factors) out += " " + m;
    out += "\ncertificate: product " + std::string(f.certificate.product_matches ? "ok" : "FAIL") +
           ", irredundant " + std::string(f.certificate.irredundant ? "ok" : "FAIL") + "\n";
    return out;
}

}  // namespace prufer
