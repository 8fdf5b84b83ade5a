#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "embkit/catalogue.hpp"
#include "embkit/classify.hpp"
#include "embkit/ideal.hpp"
#include "embkit/preorder.hpp"
#include "embkit/structure.hpp"

namespace embkit {

/// Parse failure with a 1-based line number.
struct parse_error : std::runtime_error {
    parse_error(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

namespace detail {

// Lines of a stream with comments and blanks stripped, keeping numbers.
inline std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.emplace_back(no, line);
    }
    return out;
}

inline ExtNat parse_extnat(const std::string& tok, int line) {
    if (tok == "omega") return ExtNat::omega();
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return ExtNat(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
        throw parse_error(line, "expected a number or 'omega', got '" + tok + "'");
    }
}

inline std::optional<ClassShape> shape_from_name(const std::string& name) {
    for (ClassShape s :
         {ClassShape::Full, ClassShape::Complete, ClassShape::StrictLinear,
          ClassShape::InverseStrictLinear, ClassShape::ReflexiveLinear,
          ClassShape::InverseReflexiveLinear, ClassShape::SingletonLoop,
          ClassShape::SingletonNoLoop})
        if (name == class_shape_name(s)) return s;
    return std::nullopt;
}

}  // namespace detail

// --- structure format: `points N` then `pair u v` lines -------------------

inline BinaryStructure read_structure(std::istream& in) {
    auto lines = detail::content_lines(in);
    std::optional<BinaryStructure> s;
    for (auto& [no, text] : lines) {
        std::istringstream is(text);
        std::string verb;
        is >> verb;
        if (verb == "points") {
            int n = -1;
            if (!(is >> n) || n < 0) throw parse_error(no, "bad point count");
            if (s) throw parse_error(no, "duplicate points line");
            s = BinaryStructure(n);
        } else if (verb == "pair") {
            if (!s) throw parse_error(no, "pair before points");
            int u, v;
            if (!(is >> u >> v)) throw parse_error(no, "bad pair");
            if (u < 0 || v < 0 || u >= s->size() || v >= s->size())
                throw parse_error(no, "pair out of range");
            s->add_pair(u, v);
        } else {
            throw parse_error(no, "unknown directive '" + verb + "'");
        }
    }
    if (!s) throw parse_error(1, "missing points line");
    return *s;
}

inline void write_structure(std::ostream& out, const BinaryStructure& s) {
    out << "points " << s.size() << "\n";
    for (auto [u, v] : s.pairs()) out << "pair " << u << " " << v << "\n";
}

// --- spec format -----------------------------------------------------------
// class <shape|explicit:FILE> size <n|omega> mult <n|omega>
// unbounded <shape> default_mult <n> exceptions <size:mult,...>

inline CatalogueSpec read_spec(std::istream& in,
                               const std::filesystem::path& base_dir = {}) {
    auto lines = detail::content_lines(in);
    CatalogueSpec spec;
    for (auto& [no, text] : lines) {
        std::istringstream is(text);
        std::string verb;
        is >> verb;
        if (verb == "class") {
            std::string kind, kw_size, size_tok, kw_mult, mult_tok;
            if (!(is >> kind >> kw_size >> size_tok >> kw_mult >> mult_tok) ||
                kw_size != "size" || kw_mult != "mult")
                throw parse_error(no, "expected: class <kind> size <n|omega> mult <n|omega>");
            ComponentClass c;
            c.size = detail::parse_extnat(size_tok, no);
            c.multiplicity = detail::parse_extnat(mult_tok, no);
            if (kind.rfind("explicit:", 0) == 0) {
                std::filesystem::path file = kind.substr(9);
                if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
                std::ifstream f(file);
                if (!f) throw parse_error(no, "cannot open structure file " + file.string());
                c.explicit_structure = read_structure(f);
                if (c.size.is_finite() &&
                    c.size.value() != static_cast<std::uint32_t>(c.explicit_structure.size()))
                    throw parse_error(no, "declared size disagrees with the structure file");
                c.size = ExtNat(static_cast<std::uint32_t>(c.explicit_structure.size()));
            } else {
                auto s = detail::shape_from_name(kind);
                if (!s) throw parse_error(no, "unknown shape '" + kind + "'");
                c.shape = s;
            }
            spec.classes.push_back(std::move(c));
        } else if (verb == "unbounded") {
            if (spec.family) throw parse_error(no, "duplicate unbounded line");
            std::string shape_tok, kw_dm;
            std::uint32_t dm;
            if (!(is >> shape_tok >> kw_dm >> dm) || kw_dm != "default_mult")
                throw parse_error(no, "expected: unbounded <shape> default_mult <n> ...");
            auto s = detail::shape_from_name(shape_tok);
            if (!s) throw parse_error(no, "unknown shape '" + shape_tok + "'");
            UnboundedFamily fam;
            fam.shape = *s;
            fam.default_mult = dm;
            std::string kw_ex;
            if (is >> kw_ex) {
                if (kw_ex != "exceptions") throw parse_error(no, "expected 'exceptions'");
                std::string list;
                is >> list;
                std::istringstream ls(list);
                std::string item;
                while (std::getline(ls, item, ',')) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw parse_error(no, "exception entries look like size:mult");
                    fam.exceptions[static_cast<std::uint32_t>(
                        std::stoul(item.substr(0, colon)))] =
                        static_cast<std::uint32_t>(std::stoul(item.substr(colon + 1)));
                }
            }
            spec.family = std::move(fam);
        } else {
            throw parse_error(no, "unknown directive '" + verb + "'");
        }
    }
    if (spec.classes.empty() && !spec.family) throw parse_error(1, "empty spec");
    return spec;
}

inline void write_spec(std::ostream& out, const CatalogueSpec& spec) {
    for (const auto& c : spec.classes) {
        if (c.is_explicit())
            throw std::domain_error("write_spec: explicit classes reference external files");
        out << "class " << class_shape_name(*c.shape) << " size " << c.size.str() << " mult "
            << c.multiplicity.str() << "\n";
    }
    if (spec.family) {
        out << "unbounded " << class_shape_name(spec.family->shape) << " default_mult "
            << spec.family->default_mult;
        if (!spec.family->exceptions.empty()) {
            out << " exceptions ";
            bool first = true;
            for (auto [size, mult] : spec.family->exceptions) {
                if (!first) out << ",";
                out << size << ":" << mult;
                first = false;
            }
        }
        out << "\n";
    }
}

// --- profile format ---------------------------------------------------------
// trace class=<k> component=<j> value=<n|omega>
// tail class=<k> value=<n|omega>
// tailrule bounded <b> | tailrule full

inline TraceProfile read_profile(std::istream& in, const CatalogueSpec& spec) {
    auto lines = detail::content_lines(in);
    TraceProfile p;
    p.classes.resize(spec.classes.size());
    if (spec.family) p.family = FamilyTraces{};
    auto get_kv = [](std::istringstream& is, const std::string& key, int no) {
        std::string tok;
        if (!(is >> tok) || tok.rfind(key + "=", 0) != 0)
            throw parse_error(no, "expected " + key + "=<value>");
        return tok.substr(key.size() + 1);
    };
    for (auto& [no, text] : lines) {
        std::istringstream is(text);
        std::string verb;
        is >> verb;
        if (verb == "trace") {
            std::size_t k = std::stoul(get_kv(is, "class", no));
            std::size_t j = std::stoul(get_kv(is, "component", no));
            ExtNat v = detail::parse_extnat(get_kv(is, "value", no), no);
            if (k >= p.classes.size()) throw parse_error(no, "class index out of range");
            auto& ex = p.classes[k].exceptional;
            if (ex.size() <= j) ex.resize(j + 1, ExtNat(0));
            ex[j] = v;
        } else if (verb == "tail") {
            std::size_t k = std::stoul(get_kv(is, "class", no));
            ExtNat v = detail::parse_extnat(get_kv(is, "value", no), no);
            if (k >= p.classes.size()) throw parse_error(no, "class index out of range");
            p.classes[k].tail = v;
        } else if (verb == "ftrace") {
            if (!p.family) throw parse_error(no, "spec has no unbounded family");
            FamilyException e;
            e.size = static_cast<std::uint32_t>(std::stoul(get_kv(is, "size", no)));
            e.index = static_cast<std::uint32_t>(std::stoul(get_kv(is, "component", no)));
            e.trace = detail::parse_extnat(get_kv(is, "value", no), no);
            p.family->exceptions.push_back(e);
        } else if (verb == "tailrule") {
            if (!p.family) throw parse_error(no, "spec has no unbounded family");
            std::string rule;
            is >> rule;
            if (rule == "full") {
                p.family->rule = FamilyTailRule::Full;
            } else if (rule == "bounded") {
                std::uint32_t b = 0;
                if (!(is >> b)) throw parse_error(no, "tailrule bounded needs a bound");
                p.family->rule = FamilyTailRule::Bounded;
                p.family->bound = b;
            } else {
                throw parse_error(no, "tailrule is 'bounded <b>' or 'full'");
            }
        } else {
            throw parse_error(no, "unknown directive '" + verb + "'");
        }
    }
    check_profile(spec, p);
    return p;
}

inline void write_profile(std::ostream& out, const TraceProfile& p) {
    for (std::size_t k = 0; k < p.classes.size(); ++k) {
        for (std::size_t j = 0; j < p.classes[k].exceptional.size(); ++j)
            out << "trace class=" << k << " component=" << j
                << " value=" << p.classes[k].exceptional[j].str() << "\n";
        if (p.classes[k].tail)
            out << "tail class=" << k << " value=" << p.classes[k].tail->str() << "\n";
    }
    if (p.family) {
        for (const auto& e : p.family->exceptions)
            out << "ftrace size=" << e.size << " component=" << e.index
                << " value=" << e.trace.str() << "\n";
        if (p.family->rule == FamilyTailRule::Full)
            out << "tailrule full\n";
        else
            out << "tailrule bounded " << p.family->bound << "\n";
    }
}

// --- pre-order format -------------------------------------------------------
// elements N, then `le i j` lines; closure applied unless strict

inline FinitePreOrder read_preorder(std::istream& in, bool strict = false) {
    auto lines = detail::content_lines(in);
    int n = -1;
    std::vector<std::pair<int, int>> below;
    for (auto& [no, text] : lines) {
        std::istringstream is(text);
        std::string verb;
        is >> verb;
        if (verb == "elements") {
            if (n >= 0) throw parse_error(no, "duplicate elements line");
            if (!(is >> n) || n < 0) throw parse_error(no, "bad element count");
        } else if (verb == "le") {
            if (n < 0) throw parse_error(no, "le before elements");
            int i, j;
            if (!(is >> i >> j)) throw parse_error(no, "bad le line");
            if (i < 0 || j < 0 || i >= n || j >= n) throw parse_error(no, "le out of range");
            below.emplace_back(i, j);
        } else {
            throw parse_error(no, "unknown directive '" + verb + "'");
        }
    }
    if (n < 0) throw parse_error(1, "missing elements line");
    FinitePreOrder closed = FinitePreOrder::closure(n, below);
    if (strict) {
        // reject input that was not already reflexively and transitively closed
        std::vector<char> given(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) given[static_cast<std::size_t>(i) * n + i] = 1;
        for (auto [i, j] : below) given[static_cast<std::size_t>(i) * n + j] = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (closed.le(i, j) != (given[static_cast<std::size_t>(i) * n + j] != 0))
                    throw parse_error(1, "input is not reflexive-transitive closed");
    }
    return closed;
}

inline void write_preorder(std::ostream& out, const FinitePreOrder& p) {
    out << "elements " << p.size() << "\n";
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (i != j && p.le(i, j)) out << "le " << i << " " << j << "\n";
}

// --- report rendering -------------------------------------------------------

inline std::string render_stats(const DerivedStats& st) {
    std::ostringstream os;
    os << "N = {";
    bool first = true;
    for (auto v : st.finite_sizes) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    if (st.unbounded_sizes) {
        if (!first) os << ",";
        os << "unbounded";
        first = false;
    }
    if (st.omega_size) {
        if (!first) os << ",";
        os << "omega";
    }
    os << "} mu = " << st.mu.str() << " Y " << (st.y_finite ? "finite" : "infinite");
    return os.str();
}

inline void render_report_text(std::ostream& out, const ClassificationReport& r) {
    if (!r.validation_ok) {
        out << "validation: failed\n" << r.validation.summary() << "\n";
        return;
    }
    out << "validation: ok";
    if (!r.validation.unverified.empty())
        out << " (" << r.validation.unverified.size() << " pair(s) unverified-at-scale)";
    out << "\n";
    out << "case " << r.tag << ": " << r.forcing_class->label() << "\n";
    out << render_stats(*r.stats) << "\n";
    out << "indivisible: " << (r.indivisible ? "yes" : "no") << "\n";
    if (r.witness) {
        out << "witness side A:\n";
        write_profile(out, r.witness->first);
        out << "witness side B:\n";
        write_profile(out, r.witness->second);
    }
}

inline void render_report_record(std::ostream& out, const ClassificationReport& r) {
    out << "valid=" << (r.validation_ok ? "true" : "false") << "\n";
    if (!r.validation_ok) return;
    out << "case=" << r.tag << "\n";
    out << "class=" << r.forcing_class->label() << "\n";
    if (r.forcing_class->kind == ForcingClass::Kind::FinPower)
        out << "n=" << r.forcing_class->exponent << "\n";
    out << "mu=" << r.stats->mu.str() << "\n";
    std::ostringstream nfin;
    bool first = true;
    for (auto v : r.stats->finite_sizes) {
        if (!first) nfin << ",";
        nfin << v;
        first = false;
    }
    out << "N_fin=" << (r.stats->unbounded_sizes ? "unbounded" : nfin.str()) << "\n";
    out << "N_has_omega=" << (r.stats->omega_size ? "true" : "false") << "\n";
    out << "Y_finite=" << (r.stats->y_finite ? "true" : "false") << "\n";
    out << "indivisible=" << (r.indivisible ? "true" : "false") << "\n";
    out << "witness=" << (r.witness ? "present" : "none") << "\n";
}

}  // namespace embkit
