#include <fw/expr.hh>

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>

using std::string;
using std::to_string;
using std::vector;

namespace fw
{
    auto dialect_name(Dialect d) -> string
    {
        switch (d) {
            case Dialect::Clique: return "clique";
            case Dialect::Fuse: return "fuse";
            case Dialect::Glue: return "glue";
            case Dialect::Multi: return "multi";
        }
        return "?";
    }

    auto parse_dialect(const string & s) -> Dialect
    {
        if (s == "clique") return Dialect::Clique;
        if (s == "fuse") return Dialect::Fuse;
        if (s == "glue") return Dialect::Glue;
        if (s == "multi") return Dialect::Multi;
        throw DomainError("unknown dialect '" + s + "'");
    }

    auto kind_name(Kind k) -> string
    {
        switch (k) {
            case Kind::Introduce: return "introduce";
            case Kind::Union: return "union";
            case Kind::Join: return "join";
            case Kind::Relabel: return "relabel";
            case Kind::RelabelSet: return "relabel-set";
            case Kind::Fuse: return "fuse";
            case Kind::Glue: return "glue";
        }
        return "?";
    }

    auto allowed(Dialect d, Kind k) -> bool
    {
        switch (k) {
            case Kind::Introduce:
            case Kind::Join:
                return true;
            case Kind::Union:
                return d != Dialect::Glue;
            case Kind::Relabel:
                return d != Dialect::Multi;
            case Kind::RelabelSet:
                return d == Dialect::Multi;
            case Kind::Fuse:
                return d == Dialect::Fuse;
            case Kind::Glue:
                return d == Dialect::Glue;
        }
        return false;
    }

    auto arity(Kind k) -> int
    {
        switch (k) {
            case Kind::Introduce: return 0;
            case Kind::Union:
            case Kind::Glue: return 2;
            default: return 1;
        }
    }

    ParseError::ParseError(const string & msg, int l, int c) :
        DomainError("parse error at " + to_string(l) + ":" + to_string(c) + ": " + msg),
        line(l),
        column(c)
    {
    }

    namespace
    {
        class Parser
        {
            public:
                Parser(const string & text, Dialect d) : _text(text), _dialect(d) {}

                auto run() -> Expression
                {
                    _e.dialect = _dialect;
                    skip();
                    _e.root = expr();
                    skip();
                    if (_pos != _text.size())
                        fail("trailing input");
                    return std::move(_e);
                }

            private:
                const string & _text;
                Dialect _dialect;
                std::size_t _pos = 0;
                Expression _e;

                [[noreturn]] auto fail(const string & msg) -> void
                {
                    int line = 1, col = 1;
                    for (std::size_t i = 0; i < _pos && i < _text.size(); ++i) {
                        if (_text[i] == '\n') {
                            ++line;
                            col = 1;
                        }
                        else
                            ++col;
                    }
                    throw ParseError(msg, line, col);
                }

                auto skip() -> void
                {
                    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                        ++_pos;
                }

                auto peek() -> char
                {
                    skip();
                    return _pos < _text.size() ? _text[_pos] : '\0';
                }

                auto expect(const string & s) -> void
                {
                    skip();
                    if (_text.compare(_pos, s.size(), s) != 0)
                        fail("expected '" + s + "'");
                    _pos += s.size();
                }

                auto integer() -> int
                {
                    skip();
                    std::size_t start = _pos;
                    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
                        ++_pos;
                    if (start == _pos)
                        fail("expected an integer");
                    if (_pos - start > 2)
                        fail("label too large");
                    return std::stoi(_text.substr(start, _pos - start));
                }

                auto word() -> string
                {
                    skip();
                    std::size_t start = _pos;
                    while (_pos < _text.size()) {
                        char c = _text[_pos];
                        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                            ++_pos;
                        else
                            break;
                    }
                    if (start == _pos)
                        fail("expected an expression");
                    return _text.substr(start, _pos - start);
                }

                auto add(ExprNode n, std::size_t at) -> int
                {
                    if (! allowed(_dialect, n.kind)) {
                        _pos = at;
                        fail(kind_name(n.kind) + " not allowed in " + dialect_name(_dialect) + " dialect");
                    }
                    _e.nodes.push_back(std::move(n));
                    return int(_e.nodes.size()) - 1;
                }

                auto label_list(char close) -> LabelSet
                {
                    LabelSet s = 0;
                    if (peek() == close) {
                        ++_pos;
                        return s;
                    }
                    while (true) {
                        int l = integer();
                        if (l < 1 || l > max_labels)
                            fail("label out of range");
                        s |= bit(l);
                        char c = peek();
                        if (c == ',') {
                            ++_pos;
                            continue;
                        }
                        if (c == close) {
                            ++_pos;
                            return s;
                        }
                        fail(string("expected ',' or '") + close + "'");
                    }
                }

                // "op(X + Y)" is short for "op((X + Y))"
                auto operand() -> int
                {
                    expect("(");
                    skip();
                    std::size_t at = _pos;
                    int c = expr();
                    if (peek() == '+' || peek() == '~')
                        c = binary_tail(c, at);
                    expect(")");
                    return c;
                }

                auto binary_tail(int l, std::size_t at) -> int
                {
                    char op = peek();
                    if (op != '+' && op != '~')
                        fail("expected '+' or '~'");
                    ++_pos;
                    int r = expr();
                    ExprNode n;
                    n.kind = op == '+' ? Kind::Union : Kind::Glue;
                    n.kids = {l, r};
                    return add(std::move(n), at);
                }

                auto expr() -> int
                {
                    skip();
                    std::size_t at = _pos;
                    if (peek() == '(') {
                        ++_pos;
                        int id = binary_tail(expr(), at);
                        expect(")");
                        return id;
                    }

                    string w = word();
                    if (peek() == '<') {
                        ++_pos;
                        ExprNode n;
                        n.kind = Kind::Introduce;
                        n.title = w;
                        n.labels = label_list('>');
                        if (n.labels == 0)
                            fail("introduce needs at least one label");
                        if (_dialect != Dialect::Multi && std::popcount(n.labels) != 1) {
                            _pos = at;
                            fail("multi-label introduce not allowed in " + dialect_name(_dialect) + " dialect");
                        }
                        return add(std::move(n), at);
                    }

                    auto number_after = [&](std::size_t skip_chars) {
                        string digits = w.substr(skip_chars);
                        if (digits.empty() || digits.size() > 2
                                || ! std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                            _pos = at;
                            fail("unknown operator '" + w + "'");
                        }
                        return std::stoi(digits);
                    };

                    ExprNode n;
                    switch (w[0]) {
                        case 'j': {
                            n.kind = Kind::Join;
                            n.a = number_after(1);
                            expect(",");
                            n.b = integer();
                            n.kids = {operand()};
                            break;
                        }
                        case 'f': {
                            n.kind = Kind::Fuse;
                            n.a = number_after(1);
                            n.kids = {operand()};
                            break;
                        }
                        case 'r': {
                            n.a = number_after(1);
                            expect("->");
                            if (peek() == '{') {
                                ++_pos;
                                n.kind = Kind::RelabelSet;
                                n.labels = label_list('}');
                            }
                            else {
                                n.kind = Kind::Relabel;
                                n.b = integer();
                            }
                            n.kids = {operand()};
                            break;
                        }
                        default:
                            _pos = at;
                            fail("unknown operator '" + w + "'");
                    }
                    if (n.a < 1 || n.a > max_labels || (n.kind == Kind::Join && (n.b < 1 || n.b > max_labels))
                            || (n.kind == Kind::Relabel && (n.b < 1 || n.b > max_labels))) {
                        _pos = at;
                        fail("label out of range");
                    }
                    return add(std::move(n), at);
                }
        };
    }

    auto labels_used(const Expression & e) -> LabelSet
    {
        LabelSet s = 0;
        for (auto & n : e.nodes) {
            switch (n.kind) {
                case Kind::Introduce: s |= n.labels; break;
                case Kind::Join: s |= bit(n.a) | bit(n.b); break;
                case Kind::Relabel: s |= bit(n.a) | bit(n.b); break;
                case Kind::RelabelSet: s |= bit(n.a) | n.labels; break;
                case Kind::Fuse: s |= bit(n.a); break;
                default: break;
            }
        }
        return s;
    }

    auto parse_expression(const string & text, Dialect d, int k) -> Expression
    {
        Parser p(text, d);
        auto e = p.run();
        for (int i = 0; i < e.size(); ++i)
            e.nodes[i].origin = i;
        int used = 64 - std::countl_zero(labels_used(e));
        e.k = k > 0 ? k : std::max(1, used);
        return e;
    }

    namespace
    {
        auto braces(LabelSet s) -> string
        {
            string out = "{";
            bool first = true;
            for (auto l : labels_of(s)) {
                out += (first ? "" : ",") + to_string(l);
                first = false;
            }
            return out + "}";
        }

        auto write(const Expression & e, int id, string & out, bool bare = false) -> void
        {
            auto & n = e.nodes.at(id);
            switch (n.kind) {
                case Kind::Introduce: {
                    out += n.title + "<";
                    bool first = true;
                    for (auto l : labels_of(n.labels)) {
                        out += (first ? "" : ",") + to_string(l);
                        first = false;
                    }
                    out += ">";
                    return;
                }
                case Kind::Union:
                case Kind::Glue:
                    out += bare ? "" : "(";
                    write(e, n.kids[0], out);
                    out += n.kind == Kind::Union ? " + " : " ~ ";
                    write(e, n.kids[1], out);
                    out += bare ? "" : ")";
                    return;
                case Kind::Join:
                    out += "j" + to_string(n.a) + "," + to_string(n.b) + "(";
                    break;
                case Kind::Relabel:
                    out += "r" + to_string(n.a) + "->" + to_string(n.b) + "(";
                    break;
                case Kind::RelabelSet:
                    out += "r" + to_string(n.a) + "->" + braces(n.labels) + "(";
                    break;
                case Kind::Fuse:
                    out += "f" + to_string(n.a) + "(";
                    break;
            }
            // a binary child borrows the operator's parentheses
            write(e, n.kids[0], out, true);
            out += ")";
        }
    }

    auto serialize_expression(const Expression & e) -> string
    {
        string out;
        if (e.root >= 0)
            write(e, e.root, out);
        return out;
    }

    auto structurally_equal(const Expression & x, const Expression & y) -> bool
    {
        if (x.dialect != y.dialect || x.k != y.k)
            return false;
        std::function<bool(int, int)> eq = [&](int a, int b) {
            auto & n = x.nodes.at(a);
            auto & m = y.nodes.at(b);
            if (n.kind != m.kind || n.title != m.title || n.labels != m.labels || n.a != m.a || n.b != m.b
                    || n.kids.size() != m.kids.size())
                return false;
            for (unsigned i = 0; i < n.kids.size(); ++i)
                if (! eq(n.kids[i], m.kids[i]))
                    return false;
            return true;
        };
        return eq(x.root, y.root);
    }

    auto postorder(const Expression & e) -> vector<int>
    {
        vector<int> order;
        if (e.root < 0)
            return order;
        vector<std::pair<int, bool>> stack{{e.root, false}};
        while (! stack.empty()) {
            auto [id, done] = stack.back();
            stack.pop_back();
            if (done) {
                order.push_back(id);
                continue;
            }
            stack.push_back({id, true});
            auto & kids = e.nodes.at(id).kids;
            for (auto it = kids.rbegin(); it != kids.rend(); ++it)
                stack.push_back({*it, false});
        }
        return order;
    }

    auto subexpression(const Expression & e, int id) -> Expression
    {
        Expression out;
        out.dialect = e.dialect;
        out.k = e.k;
        Expression tmp = e;
        tmp.root = id;
        std::vector<int> remap(e.nodes.size(), -1);
        for (int v : postorder(tmp)) {
            ExprNode n = e.nodes[v];
            n.origin = v;
            for (auto & c : n.kids)
                c = remap[c];
            remap[v] = int(out.nodes.size());
            out.nodes.push_back(std::move(n));
        }
        out.root = remap[id];
        return out;
    }

    auto count_kind(const Expression & e, Kind k) -> int
    {
        int c = 0;
        for (int v : postorder(e))
            if (e.nodes[v].kind == k)
                ++c;
        return c;
    }
}
