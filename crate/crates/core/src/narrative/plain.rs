//! A small TeX-to-text renderer for the subset used in the templates.

fn symbol(name: &str) -> Option<&'static str> {
    Some(match name {
        "alpha" => "α",
        "beta" => "β",
        "gamma" => "γ",
        "Gamma" => "Γ",
        "delta" => "δ",
        "Delta" => "Δ",
        "varepsilon" | "epsilon" => "ε",
        "theta" => "θ",
        "lambda" => "λ",
        "mu" => "μ",
        "nu" => "ν",
        "pi" => "π",
        "rho" => "ρ",
        "sigma" => "σ",
        "chi" => "χ",
        "leq" | "le" => "≤",
        "geq" | "ge" => "≥",
        "neq" | "ne" => "≠",
        "lt" => "<",
        "gt" => ">",
        "pm" => "±",
        "mp" => "∓",
        "times" => "×",
        "cdot" => "·",
        "sim" => "~",
        "approx" => "≈",
        "infty" => "∞",
        "in" => "∈",
        "to" => "→",
        "Rightarrow" => "⇒",
        "ldots" | "dots" | "cdots" => "…",
        "sum" => "Σ",
        "quad" => "  ",
        "qquad" => "    ",
        "mid" => "|",
        "lvert" | "rvert" | "vert" => "|",
        "exp" => "exp",
        "ln" => "ln",
        "log" => "log",
        "max" => "max",
        "min" => "min",
        "{" => "{",
        "}" => "}",
        "%" => "%",
        "," | ";" | " " | ":" => " ",
        "!" => "",
        "left" | "right" | "bigl" | "bigr" | "Bigl" | "Bigr" | "displaystyle" => "",
        _ => return None,
    })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser { chars: src.chars().collect(), pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn command_name(&mut self) -> String {
        let mut name = String::new();
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphabetic() {
                        name.push(c);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
            }
            Some(c) => {
                name.push(c);
                self.pos += 1;
            }
            None => {}
        }
        name
    }

    fn skip_spaces(&mut self) {
        while self.peek() == Some(' ') {
            self.pos += 1;
        }
    }

    /// A braced group or a single token, rendered.
    fn argument(&mut self) -> String {
        self.skip_spaces();
        match self.peek() {
            Some('{') => {
                self.pos += 1;
                self.until_close()
            }
            Some('\\') => {
                self.pos += 1;
                let name = self.command_name();
                self.command(&name)
            }
            Some(c) => {
                self.pos += 1;
                c.to_string()
            }
            None => String::new(),
        }
    }

    /// Renders up to the matching `}` and consumes it.
    fn until_close(&mut self) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c == '}' {
                self.pos += 1;
                break;
            }
            out.push_str(&self.token());
        }
        out
    }

    fn command(&mut self, name: &str) -> String {
        match name {
            "frac" | "dfrac" | "tfrac" => {
                let num = self.argument();
                let den = self.argument();
                format!("{}/{}", wrap(&num), wrap(&den))
            }
            "sqrt" => format!("√{}", paren(&self.argument())),
            "binom" => {
                let n = self.argument();
                let k = self.argument();
                format!("C({n}, {k})")
            }
            "bar" | "overline" => {
                let a = self.argument();
                combine(&a, '\u{0304}')
            }
            "hat" => {
                let a = self.argument();
                combine(&a, '\u{0302}')
            }
            "text" | "mathrm" | "operatorname" | "mathcal" | "mathbf" | "textrm" | "mathit" => self.argument(),
            other => match symbol(other) {
                Some(s) => s.to_string(),
                None => other.to_string(),
            },
        }
    }

    fn script(&mut self, marker: char) -> String {
        let arg = self.argument();
        if arg.chars().count() == 1 {
            format!("{marker}{arg}")
        } else {
            format!("{marker}({arg})")
        }
    }

    fn token(&mut self) -> String {
        let c = self.peek().unwrap();
        self.pos += 1;
        match c {
            '\\' => {
                let name = self.command_name();
                self.command(&name)
            }
            '{' => self.until_close(),
            '}' => String::new(),
            '^' => self.script('^'),
            '_' => self.script('_'),
            '~' => " ".to_string(),
            other => other.to_string(),
        }
    }

    fn render(mut self) -> String {
        let mut out = String::new();
        while self.peek().is_some() {
            out.push_str(&self.token());
        }
        out
    }
}

fn is_atomic(s: &str) -> bool {
    !s.chars().any(|c| " +-−/·×,".contains(c)) || s.starts_with('(') && s.ends_with(')')
}

fn wrap(s: &str) -> String {
    if is_atomic(s) {
        s.to_string()
    } else {
        format!("({s})")
    }
}

fn paren(s: &str) -> String {
    if s.starts_with('(') && s.ends_with(')') {
        s.to_string()
    } else {
        format!("({s})")
    }
}

fn combine(base: &str, mark: char) -> String {
    let mut out = String::new();
    let mut chars = base.chars();
    if let Some(first) = chars.next() {
        out.push(first);
        out.push(mark);
    }
    out.extend(chars);
    out
}

/// Renders TeX math as readable Unicode text.
pub fn tex_to_plain(tex: &str) -> String {
    let rendered = Parser::new(tex).render();
    let mut out = String::with_capacity(rendered.len());
    let mut prev_space = false;
    for c in rendered.chars() {
        if c == ' ' {
            if !prev_space {
                out.push(c);
            }
            prev_space = true;
        } else {
            out.push(c);
            prev_space = false;
        }
    }
    out.trim().to_string()
}
