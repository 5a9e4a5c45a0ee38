"""Free *-algebra over Q(q) on a finite generator alphabet.

Words are tuples of generator indices; the empty tuple is the unit
monomial.  Noncommutative polynomials are finite maps word -> scalar.
Also provides the star involution, multi-leg tensor elements, and the
expression parser/printer used by the CLI and file formats.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import S_ONE, S_ZERO, ScalarQ

Word = tuple


class AlgebraError(Exception):
    pass


class ParseError(AlgebraError):
    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class Alphabet:
    """Ordered list of generator names; index = position."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise AlgebraError("generator names must be unique")
        if "q" in names:
            raise AlgebraError("'q' is reserved for the deformation parameter")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def gen(self, name) -> "NCPoly":
        return NCPoly(self, {(self.index[name],): S_ONE})

    def gens(self):
        return [self.gen(n) for n in self.names]

    def word_str(self, word) -> str:
        if not word:
            return "1"
        return "*".join(self.names[i] for i in word)

    def __repr__(self):
        return f"Alphabet{self.names!r}"


class NCPoly:
    """Noncommutative polynomial: finite map from words to scalars."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=None):
        self.alphabet = alphabet
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def zero(alphabet) -> "NCPoly":
        return NCPoly(alphabet)

    @staticmethod
    def one(alphabet) -> "NCPoly":
        return NCPoly(alphabet, {(): S_ONE})

    @staticmethod
    def scalar(alphabet, c) -> "NCPoly":
        return NCPoly(alphabet, {(): c})

    def is_zero(self):
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def _check(self, other):
        if self.alphabet is not other.alphabet and self.alphabet != other.alphabet:
            raise AlgebraError("operands live over different alphabets")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, S_ZERO) + c
            if v.is_zero():
                out.pop(w, None)
            else:
                out[w] = v
        return NCPoly(self.alphabet, out)

    def __neg__(self):
        return NCPoly(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    v = out.get(w, S_ZERO) + c1 * c2
                    if v.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = v
            return NCPoly(self.alphabet, out)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything
        return self.scale(other)

    def scale(self, c) -> "NCPoly":
        if isinstance(c, (int, Fraction)):
            c = ScalarQ.from_fraction(c)
        return NCPoly(self.alphabet, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, NCPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def coeff(self, word):
        return self.terms.get(word, S_ZERO)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = self.alphabet.word_str(w)
            if c.is_one():
                parts.append(mono)
            elif mono == "1":
                parts.append(_scalar_str(c))
            else:
                parts.append(f"{_scalar_str(c)}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<NCPoly {self.pretty()}>"


def _scalar_str(c) -> str:
    """Render a scalar in the expression grammar (parenthesized if a sum)."""
    num, den = c.num, c.den
    if den.coeffs == {0: Fraction(1)} and len(num.coeffs) == 1:
        ((e, f),) = num.coeffs.items()
        if e == 0:
            return str(f)
        qpart = "q" if e == 1 else f"q^{e}"
        return qpart if f == 1 else f"{f}*{qpart}"
    return f"({c})"


class StarMap:
    """Star images of each generator, extended antimultiplicatively and
    conjugate-linearly to the whole free algebra (no relation reduction)."""

    __slots__ = ("alphabet", "images")

    def __init__(self, alphabet: Alphabet, images):
        self.alphabet = alphabet
        self.images = dict(images)
        missing = [alphabet.names[i] for i in range(len(alphabet)) if i not in self.images]
        if missing:
            raise AlgebraError(f"star images missing for generators: {missing}")

    def apply(self, poly: NCPoly) -> NCPoly:
        out = NCPoly.zero(poly.alphabet)
        for word, c in poly.terms.items():
            img = NCPoly.scalar(poly.alphabet, c.conj())
            for letter in reversed(word):
                img = img * self.images[letter]
            out = out + img
        return out


class TensorPoly:
    """Element of a tensor product of free algebras (one alphabet per leg).

    Stored as a map (word, ..., word) -> scalar.  Products are taken leg
    by leg; legs are reduced independently by their rewrite systems.
    """

    __slots__ = ("alphabets", "terms")

    def __init__(self, alphabets, terms=None):
        self.alphabets = tuple(alphabets)
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def one(alphabets) -> "TensorPoly":
        return TensorPoly(alphabets, {tuple(() for _ in alphabets): S_ONE})

    @staticmethod
    def of(*polys) -> "TensorPoly":
        """Elementary tensor of NCPolys, one per leg."""
        out = TensorPoly.one([p.alphabet for p in polys])
        for leg, p in enumerate(polys):
            out = out.mul_leg(leg, p)
        return out

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, S_ZERO) + c
            if v.is_zero():
                out.pop(k, None)
            else:
                out[k] = v
        return TensorPoly(self.alphabets, out)

    def __neg__(self):
        return TensorPoly(self.alphabets, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(w1 + w2 for w1, w2 in zip(k1, k2))
                v = out.get(k, S_ZERO) + c1 * c2
                if v.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = v
        return TensorPoly(self.alphabets, out)

    def scale(self, c) -> "TensorPoly":
        return TensorPoly(self.alphabets, {k: c * v for k, v in self.terms.items()})

    def mul_leg(self, leg, poly: NCPoly) -> "TensorPoly":
        """Right-multiply one leg by an NCPoly."""
        out = {}
        for k, c in self.terms.items():
            for w, cw in poly.terms.items():
                key = k[:leg] + (k[leg] + w,) + k[leg + 1 :]
                v = out.get(key, S_ZERO) + c * cw
                if v.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = v
        return TensorPoly(self.alphabets, out)

    def map_leg(self, leg, fn) -> "TensorPoly":
        """Apply a linear map (NCPoly -> NCPoly on the same leg alphabet,
        given word by word) to one leg and recollect."""
        out = {}
        for k, c in self.terms.items():
            img = fn(k[leg])
            for w, cw in img.terms.items():
                key = k[:leg] + (w,) + k[leg + 1 :]
                v = out.get(key, S_ZERO) + c * cw
                if v.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = v
        return TensorPoly(self.alphabets, out)

    def collapse_leg(self, leg, functional, alphabets=None) -> "TensorPoly":
        """Apply a scalar-valued functional (word -> scalar) to one leg."""
        if alphabets is None:
            alphabets = self.alphabets[:leg] + self.alphabets[leg + 1 :]
        out = {}
        for k, c in self.terms.items():
            f = functional(k[leg])
            if f.is_zero():
                continue
            key = k[:leg] + k[leg + 1 :]
            v = out.get(key, S_ZERO) + c * f
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
        return TensorPoly(alphabets, out)

    def leg_poly(self, key_rest, leg) -> NCPoly:
        raise NotImplementedError

    def __eq__(self, other):
        return (
            isinstance(other, TensorPoly)
            and self.alphabets == other.alphabets
            and self.terms == other.terms
        )

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda k: tuple((len(w), w) for w in k)):
            c = self.terms[k]
            legs = " (x) ".join(a.word_str(w) for a, w in zip(self.alphabets, k))
            if c.is_one():
                parts.append(legs)
            else:
                parts.append(f"{_scalar_str(c)}*{legs}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<TensorPoly {self.pretty()}>"


def extend_to_words(images, alphabets):
    """Extend generator -> TensorPoly images multiplicatively to words.

    Returns a function word -> TensorPoly (memoized by prefix).
    """
    cache = {(): TensorPoly.one(alphabets)}

    def ext(word):
        if word in cache:
            return cache[word]
        out = ext(word[:-1]) * images[word[-1]]
        cache[word] = out
        return out

    return ext


def extend_anti(images, alphabet):
    """Extend generator -> NCPoly images antimultiplicatively to words."""

    def ext(word) -> NCPoly:
        out = NCPoly.one(alphabet)
        for letter in reversed(word):
            out = out * images[letter]
        return out

    return ext


# ---------------------------------------------------------------------------
# Expression parser
#
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := scalar | ident | '(' expr ')'
#   scalar := integer ['/' integer] | 'q' ['^' ['-'] integer]
# ---------------------------------------------------------------------------


class _Tokenizer:
    def __init__(self, src):
        self.src = src
        self.pos = 0
        self.line = 1
        self.col = 1
        self.tokens = []
        self._run()

    def _error(self, msg):
        raise ParseError(msg, self.line, self.col)

    def _run(self):
        src = self.src
        i = 0
        line, col = 1, 1
        n = len(src)
        while i < n:
            ch = src[i]
            if ch == "\n":
                line += 1
                col = 1
                i += 1
                continue
            if ch.isspace():
                i += 1
                col += 1
                continue
            start_col = col
            if ch in "+-*/()^":
                self.tokens.append((ch, ch, line, start_col))
                i += 1
                col += 1
            elif ch.isdigit():
                j = i
                while j < n and src[j].isdigit():
                    j += 1
                self.tokens.append(("int", src[i:j], line, start_col))
                col += j - i
                i = j
            elif ch.isalpha():
                j = i
                while j < n and (src[j].isalnum()):
                    j += 1
                self.tokens.append(("ident", src[i:j], line, start_col))
                col += j - i
                i = j
            else:
                self.line, self.col = line, start_col
                self._error(f"unexpected character {ch!r}")
        self.tokens.append(("eof", "", line, col))


class _Parser:
    def __init__(self, src, alphabet: Alphabet):
        self.tokens = _Tokenizer(src).tokens
        self.pos = 0
        self.alphabet = alphabet

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], tok[3])

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            self.error(f"expected {kind!r}, found {tok[1]!r}", tok)
        return tok

    def parse(self) -> NCPoly:
        out = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            self.error(f"trailing input {tok[1]!r}", tok)
        return out

    def expr(self) -> NCPoly:
        sign = 1
        if self.peek()[0] == "-":
            self.next()
            sign = -1
        out = self.term()
        if sign < 0:
            out = -out
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> NCPoly:
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.next()[0] == "-":
                sign = -sign
        out = self.factor()
        while self.peek()[0] == "*":
            self.next()
            out = out * self.factor()
        return -out if sign < 0 else out

    def factor(self) -> NCPoly:
        tok = self.peek()
        kind, text = tok[0], tok[1]
        if kind == "(":
            self.next()
            out = self.expr()
            close = self.next()
            if close[0] != ")":
                self.error("expected ')'", close)
            return out
        if kind == "int":
            self.next()
            num = int(text)
            if self.peek()[0] == "/":
                self.next()
                dtok = self.expect("int")
                return NCPoly.scalar(
                    self.alphabet, ScalarQ.from_fraction(Fraction(num, int(dtok[1])))
                )
            return NCPoly.scalar(self.alphabet, ScalarQ.from_int(num))
        if kind == "ident":
            self.next()
            if text == "q":
                k = 1
                if self.peek()[0] == "^":
                    self.next()
                    sign = 1
                    if self.peek()[0] == "-":
                        self.next()
                        sign = -1
                    etok = self.expect("int")
                    k = sign * int(etok[1])
                return NCPoly.scalar(self.alphabet, ScalarQ.q_power(k))
            if text not in self.alphabet.index:
                self.error(f"unknown generator {text!r}", tok)
            return self.alphabet.gen(text)
        self.error(f"unexpected token {text!r}", tok)


def parse_expr(src: str, alphabet: Alphabet) -> NCPoly:
    """Parse an expression in the grammar above to an NCPoly."""
    return _Parser(src, alphabet).parse()
