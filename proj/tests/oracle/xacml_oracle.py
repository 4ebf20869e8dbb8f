#!/usr/bin/env python3
"""Stand-alone reference evaluator used to pin the golden gap and
counterexample files. Shares no code with the C++ library.

    xacml_oracle.py gaps POLICY DOMAIN
    xacml_oracle.py property POLICY DOMAIN PROPERTY
    xacml_oracle.py eval POLICY REQUEST
"""
import itertools
import re
import sys

P, D, IP, ID, IDP, NA = "p", "d", "ip", "id", "idp", "na"


def tokens(text):
    text = re.sub(r"#[^\n]*", "", text)
    return re.findall(r"!=|[A-Za-z_][A-Za-z0-9_]*|[()\[\]&|,]", text)


class Policies:
    def __init__(self, text):
        self.rules = {}
        self.nodes = {}
        self.toks = tokens(text)
        self.i = 0
        while self.i < len(self.toks):
            kind = self.take()
            if kind == "rule":
                self.rule()
            elif kind in ("policy", "policyset"):
                self.node(kind)
            else:
                raise ValueError("unexpected " + kind)
        children = {c for n in self.nodes.values() if n["kind"] == "policyset" for c in n["children"]}
        roots = [n for n in self.nodes if n not in children]
        assert len(roots) == 1, roots
        self.root = roots[0]

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want=None):
        t = self.toks[self.i]
        self.i += 1
        if want is not None and t != want:
            raise ValueError("expected %s got %s" % (want, t))
        return t

    def atom(self):
        cat = self.take()
        self.take("(")
        val = self.take()
        self.take(")")
        return (cat, val)

    def target(self):
        if self.peek() == "null":
            self.take()
            return None
        self.take("[")
        groups = []
        while True:
            alts = []
            while True:
                conj = [self.atom()]
                while self.peek() == "&":
                    self.take()
                    conj.append(self.atom())
                alts.append(conj)
                if self.peek() != "|":
                    break
                self.take()
            groups.append(alts)
            if self.peek() != ",":
                break
            self.take()
        self.take("]")
        return groups

    def rule(self):
        rid = self.take()
        self.take("effect")
        effect = {"permit": P, "deny": D}[self.take()]
        target, cond = None, None
        while self.peek() in ("target", "condition"):
            if self.take() == "target":
                target = self.target()
            else:
                cond = self.condition()
        self.rules[rid] = {"effect": effect, "target": target, "cond": cond}

    def condition(self):
        if self.peek() == "true":
            self.take()
            return None
        items = []
        while True:
            a = self.take()
            if self.peek() == "(":
                self.take()
                t = self.take()
                self.take(")")
                items.append(("pred", a, t))
            else:
                self.take("!=")
                items.append(("neq", a, self.take()))
            if self.peek() != "&":
                break
            self.take()
        return items

    def node(self, kind):
        nid = self.take()
        self.take("target")
        target = self.target()
        self.take("combine")
        alg = self.take()
        self.take("rules" if kind == "policy" else "children")
        children = []
        while self.peek() is not None and self.peek() not in ("rule", "policy", "policyset"):
            children.append(self.take())
        self.nodes[nid] = {"kind": kind, "target": target, "alg": alg, "children": children}


def is_var(t):
    return t[0].isupper()


# A request is (asserted, errors): two sets of (category, value) pairs.

def match(atom, req):
    asserted, errors = req
    if atom in errors:
        return "idt"
    return "m" if atom in asserted else "nm"


def target_value(target, req):
    if target is None:
        return "m"
    group_vals = []
    for alts in target:
        alt_vals = []
        for conj in alts:
            ms = [match(a, req) for a in conj]
            alt_vals.append("nm" if "nm" in ms else ("m" if all(m == "m" for m in ms) else "idt"))
        group_vals.append("m" if "m" in alt_vals else ("nm" if all(v == "nm" for v in alt_vals) else "idt"))
    if "nm" in group_vals:
        return "nm"
    return "m" if all(v == "m" for v in group_vals) else "idt"


def condition_value(cond, req):
    if cond is None:
        return "t"
    asserted, errors = req
    consts = sorted({v for _, v in asserted} | {t for it in cond for t in it[1:] if not is_var(t)})
    variables = sorted({t for it in cond for t in (it[2:] if it[0] == "pred" else it[1:]) if is_var(t)})
    for combo in itertools.product(consts, repeat=len(variables)):
        env = dict(zip(variables, combo))
        val = lambda t: env.get(t, t)
        ok = True
        for it in cond:
            if it[0] == "pred":
                ok = (it[1], val(it[2])) in asserted and (it[1], val(it[2])) not in errors
            else:
                ok = val(it[1]) != val(it[2])
            if not ok:
                break
        if ok:
            return "t"
    cats = {it[1] for it in cond if it[0] == "pred"}
    if any(c in cats for c, _ in errors):
        return "idt"
    return "f"


def rule_value(rule, req):
    t = target_value(rule["target"], req)
    c = condition_value(rule["cond"], req)
    if t == "m" and c == "t":
        return rule["effect"]
    if (t == "m" and c == "f") or t == "nm":
        return NA
    return "i" + rule["effect"]


def permit_overrides(s):
    if P in s:
        return P
    if IDP in s or (IP in s and (ID in s or D in s)):
        return IDP
    if IP in s and all(x in (IP, NA) for x in s):
        return IP
    if D in s and all(x in (D, ID, NA) for x in s):
        return D
    if ID in s and all(x in (ID, NA) for x in s):
        return ID
    return NA


def deny_overrides(s):
    if D in s:
        return D
    if IDP in s or (ID in s and (IP in s or P in s)):
        return IDP
    if ID in s and all(x in (ID, NA) for x in s):
        return ID
    if P in s and all(x in (P, IP, NA) for x in s):
        return P
    if IP in s and all(x in (IP, NA) for x in s):
        return IP
    return NA


def first_applicable(s):
    for x in s:
        if x != NA:
            return x
    return NA


def only_one_applicable(s):
    n = len(s)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    if IDP in s or any(s[i] in (D, ID) and s[j] in (P, IP) for i, j in pairs):
        return IDP
    if all(x not in (P, IP, IDP) for x in s) and (ID in s or any(s[i] == s[j] == D for i, j in pairs)):
        return ID
    if all(x not in (D, ID, IDP) for x in s) and (IP in s or any(s[i] == s[j] == P for i, j in pairs)):
        return IP
    applicable = [x for x in s if x != NA]
    return applicable[0] if len(applicable) == 1 else NA


COMBINE = {"po": permit_overrides, "do": deny_overrides, "fa": first_applicable, "ooa": only_one_applicable}


def node_value(pol, nid, req):
    node = pol.nodes[nid]
    if node["kind"] == "policy":
        s = [rule_value(pol.rules[r], req) for r in node["children"]]
    else:
        s = [node_value(pol, c, req) for c in node["children"]]
    t = target_value(node["target"], req)
    combined = COMBINE[node["alg"]](s)
    if t == "nm" or all(x == NA for x in s):
        return NA
    if t == "idt" and combined == D:
        return ID
    if t == "idt" and combined == P:
        return IP
    return combined


def read_domain(text):
    dom = {}
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if line:
            cat, vals = line.split(":")
            dom[cat.strip()] = sorted(vals.split())
    return dom


def requests(dom):
    cats = sorted(dom)
    for combo in itertools.product(*(dom[c] for c in cats)):
        yield (frozenset(zip(cats, combo)), frozenset())


def key(req):
    asserted, errors = req
    parts = ["%s(%s)" % a for a in asserted] + ["error(%s(%s))" % a for a in errors]
    return ",".join(sorted(parts))


def read_property(text):
    spec = {"include": [], "exclude": [], "violation": P}
    for line in text.splitlines():
        words = line.split("#")[0].split()
        if not words:
            continue
        if words[0] in ("include", "exclude"):
            for w in words[1:]:
                m = re.fullmatch(r"(\w+)\((\w+)\)", w)
                spec[words[0]].append((m.group(1), m.group(2)))
        elif words[0] == "violation":
            spec["violation"] = words[1]
    return spec


def read_request(text):
    asserted, errors = set(), set()
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"error\((\w+)\((\w+)\)\)", line)
        if m:
            errors.add((m.group(1), m.group(2)))
        else:
            m = re.fullmatch(r"(\w+)\((\w+)\)", line)
            asserted.add((m.group(1), m.group(2)))
    return (frozenset(asserted), frozenset(errors))


def main(argv):
    read = lambda path: open(path).read()
    pol = Policies(read(argv[2]))
    if argv[1] == "gaps":
        out = [key(q) for q in requests(read_domain(read(argv[3]))) if node_value(pol, pol.root, q) == NA]
    elif argv[1] == "property":
        spec = read_property(read(argv[4]))
        out = []
        for q in requests(read_domain(read(argv[3]))):
            if not all(a in q[0] for a in spec["include"]):
                continue
            if any(a in q[0] for a in spec["exclude"]):
                continue
            if node_value(pol, pol.root, q) == spec["violation"]:
                out.append(key(q))
    elif argv[1] == "eval":
        out = [node_value(pol, pol.root, read_request(read(argv[3])))]
    else:
        raise SystemExit(__doc__)
    for line in sorted(out):
        print(line)


if __name__ == "__main__":
    main(sys.argv)
