#include "msplect/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

namespace msplect {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, StarStar, Wedge, LParen, RParen, At, Eq, End };

struct Token {
    Tok kind = Tok::End;
    Rat number;
    std::string text;
    int line = 0, col = 0;
};

class Lexer {
  public:
    Lexer(const std::string& src, int line) : src_(src), line_(line) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = static_cast<int>(pos_) + 1;
        if (pos_ >= src_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string num = src_.substr(start, pos_ - start);
            std::string den = "1";
            if (pos_ < src_.size() && src_[pos_] == '/') {
                std::size_t save = pos_++;
                std::size_t dstart = pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
                if (pos_ == dstart) {
                    pos_ = save; // lone '/', not a rational
                } else {
                    den = src_.substr(dstart, pos_ - dstart);
                }
            }
            t.kind = Tok::Number;
            t.number = Rat(num + "/" + den);
            t.number.canonicalize();
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            t.kind = Tok::Ident;
            t.text = src_.substr(start, pos_ - start);
            return t;
        }
        ++pos_;
        switch (c) {
            case '+': t.kind = Tok::Plus; return t;
            case '-': t.kind = Tok::Minus; return t;
            case '*':
                if (pos_ < src_.size() && src_[pos_] == '*') {
                    ++pos_;
                    t.kind = Tok::StarStar;
                } else {
                    t.kind = Tok::Star;
                }
                return t;
            case '^': t.kind = Tok::Wedge; return t;
            case '(': t.kind = Tok::LParen; return t;
            case ')': t.kind = Tok::RParen; return t;
            case '@': t.kind = Tok::At; return t;
            case '=': t.kind = Tok::Eq; return t;
            default: throw ParseError(std::string("unexpected character '") + c + "'", line_, t.col);
        }
    }

  private:
    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }
    const std::string& src_;
    std::size_t pos_ = 0;
    int line_;
};

Value make_scalar(const ChartPtr& chart, CPoly p) {
    Value v;
    v.kind = Value::Kind::Scalar;
    v.scalar = std::move(p);
    return v;
}

Value normalize(const ChartPtr& chart, Value v) {
    // degree-0 and identically-zero values collapse to scalars
    if (v.kind == Value::Kind::Form) {
        if (v.form.re.is_zero() && v.form.im.is_zero())
            return make_scalar(chart, CPoly{Polynomial(chart->dim()), Polynomial(chart->dim())});
        if (v.form.re.degree() == 0 && v.form.im.degree() == 0)
            return make_scalar(chart, CPoly{v.form.re.coeff({}), v.form.im.coeff({})});
    } else if (v.kind == Value::Kind::MultiVec) {
        if (v.mv.re.is_zero() && v.mv.im.is_zero())
            return make_scalar(chart, CPoly{Polynomial(chart->dim()), Polynomial(chart->dim())});
        if (v.mv.re.degree() == 0 && v.mv.im.degree() == 0)
            return make_scalar(chart, CPoly{v.mv.re.coeff({}), v.mv.im.coeff({})});
    }
    return v;
}

class ExprParser {
  public:
    ExprParser(const std::string& src, int line, const ChartPtr& chart,
               const std::map<std::string, Value>& names,
               const std::map<std::string, std::pair<int, int>>& complex_coords)
        : lex_(src, line), chart_(chart), names_(names), complex_(complex_coords), line_(line) {
        advance();
    }

    Value parse() {
        Value v = expr();
        expect(Tok::End, "end of expression");
        return v;
    }

  private:
    void advance() { cur_ = lex_.next(); }
    void expect(Tok k, const std::string& what) {
        if (cur_.kind != k) throw ParseError("expected " + what, cur_.line, cur_.col);
    }

    Value expr() {
        Value v = wedge_expr();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool plus = cur_.kind == Tok::Plus;
            advance();
            Value r = wedge_expr();
            v = add(v, r, plus);
        }
        return v;
    }

    Value wedge_expr() {
        Value v = term();
        while (cur_.kind == Tok::Wedge) {
            advance();
            Value r = term();
            v = wedge_values(v, r);
        }
        return v;
    }

    Value term() {
        Value v = unary();
        while (cur_.kind == Tok::Star) {
            advance();
            Value r = unary();
            v = multiply(v, r);
        }
        return v;
    }

    Value unary() {
        if (cur_.kind == Tok::Minus) {
            advance();
            Value v = unary();
            return negate(v);
        }
        return power();
    }

    Value power() {
        Value v = atom();
        if (cur_.kind == Tok::StarStar) {
            int line = cur_.line, col = cur_.col;
            advance();
            if (cur_.kind != Tok::Number || cur_.number.get_den() != 1 || sgn(cur_.number) < 0)
                throw ParseError("'**' needs a natural-number exponent", cur_.line, cur_.col);
            if (v.kind != Value::Kind::Scalar)
                throw ParseError("'**' applies to scalars only", line, col);
            long e = cur_.number.get_num().get_si();
            advance();
            CPoly acc{Polynomial::constant(chart_->dim(), Rat(1)), Polynomial(chart_->dim())};
            for (long i = 0; i < e; ++i) acc = cmul(acc, v.scalar);
            return make_scalar(chart_, std::move(acc));
        }
        return v;
    }

    Value atom() {
        if (cur_.kind == Tok::Number) {
            Rat r = cur_.number;
            advance();
            return make_scalar(chart_, CPoly{Polynomial::constant(chart_->dim(), r),
                                             Polynomial(chart_->dim())});
        }
        if (cur_.kind == Tok::LParen) {
            advance();
            Value v = expr();
            expect(Tok::RParen, "')'");
            advance();
            return v;
        }
        if (cur_.kind == Tok::At) {
            advance();
            expect(Tok::Ident, "coordinate name after '@'");
            std::string name = cur_.text;
            int line = cur_.line, col = cur_.col;
            advance();
            return basis_field(name, line, col);
        }
        if (cur_.kind == Tok::Ident) {
            std::string name = cur_.text;
            int line = cur_.line, col = cur_.col;
            advance();
            if (name == "d" && cur_.kind == Tok::LParen) {
                advance();
                Value v = expr();
                expect(Tok::RParen, "')'");
                advance();
                return differential(v, line, col);
            }
            if ((name == "Re" || name == "Im" || name == "conj") && cur_.kind == Tok::LParen) {
                advance();
                Value v = expr();
                expect(Tok::RParen, "')'");
                advance();
                return projection(name, v);
            }
            if (name == "i")
                return make_scalar(chart_, CPoly{Polynomial(chart_->dim()),
                                                 Polynomial::constant(chart_->dim(), Rat(1))});
            return lookup(name, line, col);
        }
        throw ParseError("expected an expression", cur_.line, cur_.col);
    }

    Value lookup(const std::string& name, int line, int col) {
        int ci = chart_->index_of(name);
        if (ci >= 0)
            return make_scalar(chart_, CPoly{Polynomial::variable(chart_->dim(), ci),
                                             Polynomial(chart_->dim())});
        auto it = names_.find(name);
        if (it != names_.end()) return it->second;
        throw ParseError("unknown identifier '" + name + "'", line, col);
    }

    Value basis_field(const std::string& name, int line, int col) {
        Value v;
        v.kind = Value::Kind::MultiVec;
        int ci = chart_->index_of(name);
        if (ci >= 0) {
            v.mv = CMultiVec{MultiVec::basis(chart_, {ci}), MultiVec(chart_, 1)};
            return v;
        }
        auto it = complex_.find(name);
        if (it != complex_.end()) {
            // Wirtinger field: @z = (1/2)(@x - i @y)
            Rat half(1, 2);
            MultiVec re = half * MultiVec::basis(chart_, {it->second.first});
            MultiVec im = (-half) * MultiVec::basis(chart_, {it->second.second});
            v.mv = CMultiVec{std::move(re), std::move(im)};
            return v;
        }
        throw ParseError("'@" + name + "' is not a chart or complex coordinate", line, col);
    }

    Value differential(const Value& v, int line, int col) {
        if (v.kind == Value::Kind::MultiVec)
            throw ParseError("d() applies to forms and scalars, not multivectors", line, col);
        Value out;
        out.kind = Value::Kind::Form;
        if (v.kind == Value::Kind::Scalar) {
            out.form = cext_d(CForm{Form::scalar(chart_, v.scalar.re), Form::scalar(chart_, v.scalar.im)});
        } else {
            out.form = cext_d(v.form);
        }
        return normalize(chart_, out);
    }

    Value projection(const std::string& fn, const Value& v) {
        Value out = v;
        auto apply = [&](auto& pair) {
            if (fn == "Re") {
                pair.im = pair.im - pair.im; // zero of the right shape
            } else if (fn == "Im") {
                pair.re = pair.im;
                pair.im = pair.im - pair.im;
            } else {
                pair = pair.conj();
            }
        };
        switch (out.kind) {
            case Value::Kind::Scalar: apply(out.scalar); break;
            case Value::Kind::Form: apply(out.form); break;
            case Value::Kind::MultiVec: apply(out.mv); break;
        }
        return normalize(chart_, out);
    }

    Value negate(const Value& v) {
        Value out = v;
        switch (out.kind) {
            case Value::Kind::Scalar: out.scalar = -out.scalar; break;
            case Value::Kind::Form: out.form = -out.form; break;
            case Value::Kind::MultiVec: out.mv = -out.mv; break;
        }
        return out;
    }

    Value add(const Value& a, const Value& b, bool plus) {
        Value bb = plus ? b : negate(b);
        if (a.kind == Value::Kind::Scalar && a.is_zero()) return bb;
        if (bb.kind == Value::Kind::Scalar && bb.is_zero()) return a;
        if (a.kind != bb.kind)
            throw ParseError("cannot add values of different kinds", cur_.line, cur_.col);
        Value out = a;
        switch (a.kind) {
            case Value::Kind::Scalar: out.scalar += bb.scalar; break;
            case Value::Kind::Form: out.form += bb.form; break;
            case Value::Kind::MultiVec: out.mv += bb.mv; break;
        }
        return normalize(chart_, out);
    }

    Value multiply(const Value& a, const Value& b) {
        if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar)
            return make_scalar(chart_, cmul(a.scalar, b.scalar));
        if (a.kind == Value::Kind::Scalar || b.kind == Value::Kind::Scalar) {
            const Value& s = a.kind == Value::Kind::Scalar ? a : b;
            const Value& x = a.kind == Value::Kind::Scalar ? b : a;
            Value out = x;
            if (x.kind == Value::Kind::Form)
                out.form = cscale(s.scalar, x.form);
            else
                out.mv = cscale(s.scalar, x.mv);
            return normalize(chart_, out);
        }
        throw ParseError("'*' needs a scalar factor; use '^' for graded products", cur_.line,
                         cur_.col);
    }

    Value wedge_values(const Value& a, const Value& b) {
        if (a.kind == Value::Kind::Scalar || b.kind == Value::Kind::Scalar) return multiply(a, b);
        if (a.kind != b.kind)
            throw ParseError("'^' needs two forms or two multivectors", cur_.line, cur_.col);
        Value out;
        out.kind = a.kind;
        if (a.kind == Value::Kind::Form)
            out.form = cwedge(a.form, b.form);
        else
            out.mv = cwedge(a.mv, b.mv);
        return normalize(chart_, out);
    }

    Lexer lex_;
    Token cur_;
    ChartPtr chart_;
    const std::map<std::string, Value>& names_;
    const std::map<std::string, std::pair<int, int>>& complex_;
    int line_;
};

} // namespace

bool Value::is_real() const {
    switch (kind) {
        case Kind::Scalar: return scalar.is_real();
        case Kind::Form: return form.is_real();
        case Kind::MultiVec: return mv.is_real();
    }
    return true;
}

bool Value::is_zero() const {
    switch (kind) {
        case Kind::Scalar: return scalar.re.is_zero() && scalar.im.is_zero();
        case Kind::Form: return form.re.is_zero() && form.im.is_zero();
        case Kind::MultiVec: return mv.re.is_zero() && mv.im.is_zero();
    }
    return true;
}

std::string Value::to_text(const ChartPtr& chart) const {
    auto paired = [&](const std::string& re, const std::string& im, bool im_zero) {
        if (im_zero) return re;
        return "(" + re + ") + i*(" + im + ")";
    };
    switch (kind) {
        case Kind::Scalar:
            return paired(scalar.re.to_string(chart->names()), scalar.im.to_string(chart->names()),
                          scalar.im.is_zero());
        case Kind::Form: return paired(form.re.to_string(), form.im.to_string(), form.im.is_zero());
        case Kind::MultiVec: return paired(mv.re.to_string(), mv.im.to_string(), mv.im.is_zero());
    }
    return "0";
}

std::optional<std::string> TaskSpec::arg(const std::string& key) const {
    for (const auto& a : args) {
        auto pos = a.find('=');
        if (pos != std::string::npos && a.substr(0, pos) == key) return a.substr(pos + 1);
    }
    return std::nullopt;
}

Value evaluate_expression(const std::string& text, const ChartPtr& chart,
                          const std::map<std::string, Value>& names,
                          const std::map<std::string, std::pair<int, int>>& complex_coords) {
    ExprParser p(text, 1, chart, names, complex_coords);
    return p.parse();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

struct WorkspaceBuilder {
    WorkspaceFile ws;
    std::map<std::string, std::pair<int, int>> complex_coords;
    std::map<std::string, std::string> pending_brackets; // "i j" -> rhs text, parsed after dim
    int algebra_dim = 0;
    std::vector<std::pair<int, std::string>> generator_lines; // basis index, rhs
    std::vector<std::tuple<std::string, std::string, int>> system_lines;
    int lineno = 0;

    void require_chart(int line) {
        if (!ws.chart) throw ParseError("[chart] section must come first", line, 1);
    }
};

} // namespace

ActionData WorkspaceFile::action() const {
    if (!algebra) throw std::logic_error("workspace has no [lie_algebra] section");
    if (generators.empty()) throw std::logic_error("workspace has no [action] section");
    return ActionData(*algebra, chart, generators);
}

const Value& WorkspaceFile::lookup(const std::string& name) const {
    auto it = defines.find(name);
    if (it == defines.end()) throw std::invalid_argument("unknown name '" + name + "'");
    return it->second;
}

WorkspaceFile parse_workspace_text(const std::string& text) {
    WorkspaceBuilder b;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    std::vector<std::vector<std::vector<Rat>>> structure;

    auto eval = [&](const std::string& expr, int line) {
        ExprParser p(expr, line, b.ws.chart, b.ws.defines, b.complex_coords);
        return p.parse();
    };

    while (std::getline(in, raw)) {
        ++b.lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("malformed section header", b.lineno, 1);
            section = line.substr(1, line.size() - 2);
            if (section != "chart" && section != "lie_algebra" && section != "action" &&
                section != "system" && section != "define" && section != "tasks")
                throw ParseError("unknown section [" + section + "]", b.lineno, 1);
            continue;
        }
        if (section.empty()) throw ParseError("content before any section", b.lineno, 1);

        if (section == "chart") {
            auto eq = line.find('=');
            if (eq == std::string::npos || trim(line.substr(0, eq)) != "coords")
                throw ParseError("expected 'coords = name ...'", b.lineno, 1);
            std::vector<std::string> names = split_ws(line.substr(eq + 1));
            if (names.empty()) throw ParseError("chart needs at least one coordinate", b.lineno, 1);
            try {
                b.ws.chart = make_chart(names);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), b.lineno, 1);
            }
            continue;
        }

        if (section == "lie_algebra") {
            b.require_chart(b.lineno);
            auto words = split_ws(line);
            if (words.size() >= 3 && words[0] == "dim" && words[1] == "=") {
                b.algebra_dim = std::stoi(words[2]);
                if (b.algebra_dim <= 0) throw ParseError("dim must be positive", b.lineno, 1);
                structure.assign(static_cast<std::size_t>(b.algebra_dim),
                                 std::vector(static_cast<std::size_t>(b.algebra_dim),
                                             std::vector(static_cast<std::size_t>(b.algebra_dim), Rat(0))));
                continue;
            }
            if (words.size() >= 4 && words[0] == "bracket") {
                if (b.algebra_dim == 0) throw ParseError("dim must precede bracket lines", b.lineno, 1);
                auto basis_index = [&](const std::string& w) {
                    if (w.size() < 2 || w[0] != 'e') throw ParseError("expected basis name e<k>", b.lineno, 1);
                    int k = std::stoi(w.substr(1));
                    if (k < 1 || k > b.algebra_dim) throw ParseError("basis index out of range", b.lineno, 1);
                    return k - 1;
                };
                int i = basis_index(words[1]);
                int j = basis_index(words[2]);
                auto eq = line.find('=');
                if (eq == std::string::npos) throw ParseError("expected '=' in bracket line", b.lineno, 1);
                std::string rhs = trim(line.substr(eq + 1));
                if (rhs == "0") continue;
                // rhs: linear combination of e<k> with rational coefficients
                Lexer lex(rhs, b.lineno);
                Token t = lex.next();
                bool any = false;
                Rat sign(1);
                Rat coeff(1);
                bool have_coeff = false;
                while (t.kind != Tok::End) {
                    if (t.kind == Tok::Plus) {
                        sign = Rat(1);
                        coeff = Rat(1);
                        have_coeff = false;
                    } else if (t.kind == Tok::Minus) {
                        sign = -sign;
                    } else if (t.kind == Tok::Number) {
                        coeff = t.number;
                        have_coeff = true;
                        Token nxt = lex.next();
                        if (nxt.kind != Tok::Star)
                            throw ParseError("expected '*' after coefficient", b.lineno, t.col);
                    } else if (t.kind == Tok::Ident) {
                        int k = basis_index(t.text);
                        Rat c = sign * (have_coeff ? coeff : Rat(1));
                        structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                 [static_cast<std::size_t>(k)] += c;
                        structure[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                                 [static_cast<std::size_t>(k)] -= c;
                        sign = Rat(1);
                        coeff = Rat(1);
                        have_coeff = false;
                        any = true;
                    } else if (t.kind == Tok::Star) {
                        // tolerated between coefficient and basis name
                    } else {
                        throw ParseError("malformed bracket right side", b.lineno, t.col);
                    }
                    t = lex.next();
                }
                if (!any && rhs != "0") throw ParseError("empty bracket right side", b.lineno, 1);
                continue;
            }
            throw ParseError("expected 'dim = N' or 'bracket ei ej = ...'", b.lineno, 1);
        }

        if (section == "action") {
            b.require_chart(b.lineno);
            auto eq = line.find('=');
            if (eq == std::string::npos) throw ParseError("expected 'e<k> = expression'", b.lineno, 1);
            std::string name = trim(line.substr(0, eq));
            if (name.size() < 2 || name[0] != 'e') throw ParseError("generator name must be e<k>", b.lineno, 1);
            int k = std::stoi(name.substr(1)) - 1;
            b.generator_lines.emplace_back(k, trim(line.substr(eq + 1)));
            continue;
        }

        if (section == "define") {
            b.require_chart(b.lineno);
            std::string body = line;
            bool is_complex = false;
            if (body.rfind("complex ", 0) == 0) {
                is_complex = true;
                body = trim(body.substr(8));
            }
            auto eq = body.find('=');
            if (eq == std::string::npos) throw ParseError("expected 'name = expression'", b.lineno, 1);
            std::string name = trim(body.substr(0, eq));
            std::string rhs = trim(body.substr(eq + 1));
            if (name.empty()) throw ParseError("empty define name", b.lineno, 1);
            if (b.ws.defines.count(name) || b.ws.chart->index_of(name) >= 0 ||
                b.complex_coords.count(name))
                throw ParseError("duplicate name '" + name + "'", b.lineno, 1);
            Value v = eval(rhs, b.lineno);
            if (is_complex) {
                // must be coordinate + i * coordinate
                if (v.kind != Value::Kind::Scalar)
                    throw ParseError("complex declaration must be scalar", b.lineno, 1);
                auto coordinate_index = [&](const Polynomial& p) {
                    if (p.terms().size() != 1 || p.terms().begin()->second != Rat(1)) return -1;
                    const Exponents& e = p.terms().begin()->first;
                    int idx = -1;
                    for (std::size_t t = 0; t < e.size(); ++t) {
                        if (e[t] == 1 && idx == -1)
                            idx = static_cast<int>(t);
                        else if (e[t] != 0)
                            return -1;
                    }
                    return idx;
                };
                int re_idx = coordinate_index(v.scalar.re);
                int im_idx = coordinate_index(v.scalar.im);
                if (re_idx < 0 || im_idx < 0)
                    throw ParseError("complex declaration must read 'z = x + i*y' with chart coordinates",
                                     b.lineno, 1);
                b.complex_coords[name] = {re_idx, im_idx};
                b.ws.complex_decls.push_back({name, {b.ws.chart->name(re_idx), b.ws.chart->name(im_idx)}});
            }
            b.ws.defines.emplace(name, std::move(v));
            b.ws.define_order.push_back(name);
            continue;
        }

        if (section == "system") {
            b.require_chart(b.lineno);
            auto eq = line.find('=');
            if (eq == std::string::npos) throw ParseError("expected 'key = value'", b.lineno, 1);
            std::string key = trim(line.substr(0, eq));
            std::string rhs = trim(line.substr(eq + 1));
            b.system_lines.emplace_back(key, rhs, b.lineno);
            continue;
        }

        if (section == "tasks") {
            auto words = split_ws(line);
            TaskSpec t;
            t.name = words.front();
            t.args.assign(words.begin() + 1, words.end());
            b.ws.tasks.push_back(std::move(t));
            continue;
        }
    }

    if (!b.ws.chart) throw ParseError("missing [chart] section", b.lineno, 1);

    if (b.algebra_dim > 0) {
        try {
            b.ws.algebra = LieAlgebraData(b.algebra_dim, structure);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), b.lineno, 1);
        }
    }

    if (!b.generator_lines.empty()) {
        if (!b.ws.algebra) throw ParseError("[action] requires [lie_algebra]", b.lineno, 1);
        b.ws.generators.assign(static_cast<std::size_t>(b.algebra_dim), MultiVec(b.ws.chart, 1));
        for (const auto& [k, rhs] : b.generator_lines) {
            if (k < 0 || k >= b.algebra_dim) throw ParseError("generator index out of range", b.lineno, 1);
            ExprParser p(rhs, b.lineno, b.ws.chart, b.ws.defines, b.complex_coords);
            Value v = p.parse();
            if (v.kind != Value::Kind::MultiVec || !v.is_real() ||
                (!v.mv.re.is_zero() && v.mv.re.degree() != 1))
                throw ParseError("generator must be a real vector field", b.lineno, 1);
            b.ws.generators[static_cast<std::size_t>(k)] = v.mv.re;
        }
        // construction validates [V_i,V_j] = -V_{[e_i,e_j]}
        ActionData check(*b.ws.algebra, b.ws.chart, b.ws.generators);
        (void)check;
    }

    for (const auto& [key, rhs, line] : b.system_lines) {
        if (key == "omega" || key == "hamiltonian") {
            ExprParser p(rhs, line, b.ws.chart, b.ws.defines, b.complex_coords);
            Value v = p.parse();
            if (!v.is_real()) throw ParseError(key + " must be a real form", line, 1);
            Form f(b.ws.chart, 0);
            if (v.kind == Value::Kind::Form)
                f = v.form.re;
            else if (v.kind == Value::Kind::Scalar)
                f = Form::scalar(b.ws.chart, v.scalar.re);
            else
                throw ParseError(key + " must be a form", line, 1);
            if (key == "omega") {
                if (f.is_zero()) b.ws.warnings.push_back("omega is the zero form");
                b.ws.omega = std::move(f);
            } else {
                b.ws.hamiltonian = std::move(f);
            }
        } else if (key == "convention") {
            if (rhs == "strict") {
                b.ws.convention.hamiltonian_sign = PairingSign::Strict;
                b.ws.convention.comomentum_sign = PairingSign::Strict;
            } else if (rhs == "paper") {
                b.ws.convention.hamiltonian_sign = PairingSign::Paper;
                b.ws.convention.comomentum_sign = PairingSign::Paper;
            } else {
                throw ParseError("convention must be 'strict' or 'paper'", line, 1);
            }
        } else if (key == "hamiltonian_sign" || key == "comomentum_sign") {
            PairingSign s;
            if (rhs == "strict")
                s = PairingSign::Strict;
            else if (rhs == "paper")
                s = PairingSign::Paper;
            else
                throw ParseError(key + " must be 'strict' or 'paper'", line, 1);
            if (key == "hamiltonian_sign")
                b.ws.convention.hamiltonian_sign = s;
            else
                b.ws.convention.comomentum_sign = s;
        } else {
            throw ParseError("unknown system key '" + key + "'", line, 1);
        }
    }

    return b.ws;
}

WorkspaceFile parse_workspace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open workspace file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_workspace_text(ss.str());
}

std::string WorkspaceFile::to_text() const {
    std::ostringstream os;
    os << "[chart]\ncoords =";
    for (const auto& n : chart->names()) os << " " << n;
    os << "\n";
    if (algebra) {
        os << "\n[lie_algebra]\ndim = " << algebra->dim() << "\n";
        for (int i = 0; i < algebra->dim(); ++i) {
            for (int j = i + 1; j < algebra->dim(); ++j) {
                WedgePower br = algebra->bracket_basis(i, j);
                if (br.is_zero()) continue;
                os << "bracket e" << (i + 1) << " e" << (j + 1) << " =";
                bool first = true;
                for (const auto& [idx, c] : br.coeffs()) {
                    os << (first ? " " : " + ");
                    first = false;
                    if (c != Rat(1)) os << c.get_str() << "*";
                    os << "e" << (idx[0] + 1);
                }
                os << "\n";
            }
        }
    }
    if (!generators.empty()) {
        os << "\n[action]\n";
        for (std::size_t k = 0; k < generators.size(); ++k)
            os << "e" << (k + 1) << " = " << generators[k].to_string() << "\n";
    }
    if (!define_order.empty()) {
        os << "\n[define]\n";
        for (const auto& name : define_order) {
            bool is_complex = false;
            for (const auto& [z, xy] : complex_decls) {
                if (z == name) {
                    os << "complex " << z << " = " << xy.first << " + i*" << xy.second << "\n";
                    is_complex = true;
                }
            }
            if (!is_complex) os << name << " = " << defines.at(name).to_text(chart) << "\n";
        }
    }
    if (omega || hamiltonian) {
        os << "\n[system]\n";
        if (omega) os << "omega = " << (omega->is_zero() ? "0" : omega->to_string()) << "\n";
        if (hamiltonian)
            os << "hamiltonian = " << (hamiltonian->is_zero() ? "0" : hamiltonian->to_string()) << "\n";
        os << "hamiltonian_sign = " << pairing_name(convention.hamiltonian_sign) << "\n";
        os << "comomentum_sign = " << pairing_name(convention.comomentum_sign) << "\n";
    }
    if (!tasks.empty()) {
        os << "\n[tasks]\n";
        for (const auto& t : tasks) {
            os << t.name;
            for (const auto& a : t.args) os << " " << a;
            os << "\n";
        }
    }
    return os.str();
}

bool WorkspaceFile::operator==(const WorkspaceFile& o) const {
    if (!(*chart == *o.chart)) return false;
    if (define_order != o.define_order) return false;
    for (const auto& n : define_order) {
        const Value& a = defines.at(n);
        const Value& bvalue = o.defines.at(n);
        if (a.kind != bvalue.kind) return false;
        switch (a.kind) {
            case Value::Kind::Scalar:
                if (!(a.scalar == bvalue.scalar)) return false;
                break;
            case Value::Kind::Form:
                if (!(a.form == bvalue.form)) return false;
                break;
            case Value::Kind::MultiVec:
                if (!(a.mv == bvalue.mv)) return false;
                break;
        }
    }
    if (algebra.has_value() != o.algebra.has_value()) return false;
    if (algebra) {
        if (algebra->dim() != o.algebra->dim()) return false;
        for (int i = 0; i < algebra->dim(); ++i)
            for (int j = 0; j < algebra->dim(); ++j)
                for (int k = 0; k < algebra->dim(); ++k)
                    if (algebra->c(i, j, k) != o.algebra->c(i, j, k)) return false;
    }
    if (generators.size() != o.generators.size()) return false;
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] != o.generators[i]) return false;
    if (omega.has_value() != o.omega.has_value()) return false;
    if (omega && !(*omega == *o.omega)) return false;
    if (hamiltonian.has_value() != o.hamiltonian.has_value()) return false;
    if (hamiltonian && !(*hamiltonian == *o.hamiltonian)) return false;
    if (convention.hamiltonian_sign != o.convention.hamiltonian_sign) return false;
    if (convention.comomentum_sign != o.convention.comomentum_sign) return false;
    return tasks == o.tasks;
}

} // namespace msplect
