// Syntax check for polynomial text, run before any request goes out. This is
// the same grammar the server's parser accepts: integer literals, symbol
// names, + - * ^ ( ), and division by a rational constant. Nothing here
// evaluates anything; a string either looks like a polynomial or it does not.

export interface PolyTextError {
  ok: false;
  message: string;
  position: number;
}

export type PolyTextResult = { ok: true } | PolyTextError;

interface Token {
  kind: "int" | "name" | "op";
  text: string;
  pos: number;
}

const OPS = new Set(["+", "-", "*", "/", "^", "(", ")"]);

function tokenize(text: string): Token[] | PolyTextError {
  const tokens: Token[] = [];
  let i = 0;
  while (i < text.length) {
    const ch = text[i];
    if (ch === " " || ch === "\t" || ch === "\n") {
      i += 1;
    } else if (ch >= "0" && ch <= "9") {
      let j = i;
      while (j < text.length && text[j] >= "0" && text[j] <= "9") j += 1;
      tokens.push({ kind: "int", text: text.slice(i, j), pos: i });
      i = j;
    } else if (/[A-Za-z_]/.test(ch)) {
      let j = i;
      while (j < text.length && /[A-Za-z0-9_]/.test(text[j])) j += 1;
      tokens.push({ kind: "name", text: text.slice(i, j), pos: i });
      i = j;
    } else if (OPS.has(ch)) {
      tokens.push({ kind: "op", text: ch, pos: i });
      i += 1;
    } else {
      return { ok: false, message: `unexpected character '${ch}'`, position: i };
    }
  }
  return tokens;
}

class Parser {
  private pos = 0;

  constructor(private tokens: Token[], private length: number) {}

  peek(): Token | null {
    return this.pos < this.tokens.length ? this.tokens[this.pos] : null;
  }

  next(): Token | null {
    const t = this.peek();
    if (t) this.pos += 1;
    return t;
  }

  fail(message: string): PolyTextError {
    const t = this.peek();
    return { ok: false, message, position: t ? t.pos : this.length };
  }

  expr(): PolyTextResult {
    let r = this.term();
    if (!r.ok) return r;
    for (let t = this.peek(); t && (t.text === "+" || t.text === "-"); t = this.peek()) {
      this.next();
      r = this.term();
      if (!r.ok) return r;
    }
    return { ok: true };
  }

  term(): PolyTextResult {
    let r = this.signedFactor();
    if (!r.ok) return r;
    for (let t = this.peek(); t && (t.text === "*" || t.text === "/"); t = this.peek()) {
      this.next();
      if (t.text === "/") {
        r = this.divisor();
      } else {
        r = this.signedFactor();
      }
      if (!r.ok) return r;
    }
    return { ok: true };
  }

  signedFactor(): PolyTextResult {
    for (let t = this.peek(); t && (t.text === "+" || t.text === "-"); t = this.peek()) {
      this.next();
    }
    return this.factor();
  }

  divisor(): PolyTextResult {
    // mirrors the server rule: you may divide by a rational constant only
    for (let t = this.peek(); t && (t.text === "+" || t.text === "-"); t = this.peek()) {
      this.next();
    }
    const t = this.peek();
    if (!t || t.kind !== "int") {
      return this.fail("divisor must be an integer constant");
    }
    this.next();
    return { ok: true };
  }

  factor(): PolyTextResult {
    const t = this.peek();
    if (!t) return this.fail("expected a number, name, or '('");
    if (t.kind === "int" || t.kind === "name") {
      this.next();
      return this.power();
    }
    if (t.text === "(") {
      this.next();
      const inner = this.expr();
      if (!inner.ok) return inner;
      const close = this.peek();
      if (!close || close.text !== ")") return this.fail("expected ')'");
      this.next();
      return this.power();
    }
    return this.fail(`expected a number, name, or '(' but found '${t.text}'`);
  }

  power(): PolyTextResult {
    const t = this.peek();
    if (!t || t.text !== "^") return { ok: true };
    this.next();
    const e = this.peek();
    if (!e || e.kind !== "int") return this.fail("exponent must be a non-negative integer");
    this.next();
    return { ok: true };
  }

  atEnd(): boolean {
    return this.pos >= this.tokens.length;
  }
}

export function checkPolyText(text: string): PolyTextResult {
  const tokens = tokenize(text);
  if (!Array.isArray(tokens)) return tokens;
  if (tokens.length === 0) {
    return { ok: false, message: "empty expression", position: 0 };
  }
  const parser = new Parser(tokens, text.length);
  const r = parser.expr();
  if (!r.ok) return r;
  if (!parser.atEnd()) {
    return parser.fail("unexpected trailing input") as PolyTextError;
  }
  return { ok: true };
}
