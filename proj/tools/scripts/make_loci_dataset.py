# Regenerates data/genus4_loci.json and prints a per-family check (needs sympy).
import json, os, sympy as sp
from math import gcd
x = sp.symbols('x')
rows = """1|0|S5|120,34|0-(2, 4, 5)|1|
2|0|C3 x S4|72,42|0-(2, 3, 12)|3|
3|0||72,40|0-(2, 4, 6)|4|
4|0|V10|40,8|0-(2, 4, 10)|7|
5|0|C6 x S3|36,12|0-(2, 6, 6)|10|
6|0|U8|32,19|0-(2, 4, 16)|16|
7|0|SL2(3)|24,3|0-(3, 4, 6)|20|
8|0|C18|18,2|0-(2, 9, 18)|27|
9|0|C15|15,1|0-(3, 5, 15)|38|
10|0|C12|12,2|0-(4, 6, 12)|45|
11|0|C10|10,2|0-(5, 10, 10)|51|
12|1|S3^2|36,10|0-(2, 2, 2, 3)|12|3
13|1|S4|24,12|0-(2, 2, 2, 4)|18|1,2
14|1|C2 x D5|20,4|0-(2, 2, 2, 5)|21|4
15|1|C3 x S3|18,3|0-(2, 2, 3, 3)|30|2,5
16|1|D8|16,7|0-(2, 2, 2, 8)|35|6
17|1|C2 x C6|12,5|0-(2, 2, 3, 6)|46|2,5
18|1|C2 x S3|12,4|0-(2, 2, 3, 6)|41|3
19|1|A4|12,3|0-(2, 3, 3, 3)|43|2
20|1|D10|10,1|0-(2, 2, 5, 5)|49|1
21|1|Q8|8,4|0-(2, 4, 4, 4)|59|6,7
22|1|C6|6,2|0-(2, 6, 6, 6)|66|5,10
23|1|C5|5,1|0-(5, 5, 5, 5)|69|9,11
24|2|D6|12,4|0-(2^{5})|40|1,5,12
25|2|D4|8,3|0-(2^{4}, 4)|57|3,13
26|2|D4|8,3|0-(2^{4}, 4)|56|4,16
27|2|C6|6,2|0-(2^{3}, 3, 6)|64|7,8
28|2|C6|6,2|0-(2^{2}, 3^{3})|65|15,17
29|2|S3|6,1|0-(2^{2}, 3^{3})|62|12,18
30|2|C4|4,1|0-(2, 4^{4})|77|10
31|3|S3|6,1|0-(2^{6})|61|13,15,24
32|3|V4|4,2|1-(2, 2, 2)|72|18,19,25
33|3|C4|4,1|0-(2^{4}, 4^{2})|76|21,26
34|3|C3|3,1|0-(3^{6})|80|9,28
35|3|C3|3,1|0-(3^{6})|81|29
36|3|C3|3,1|1-(3, 3, 3)|79|15,19,22,27
37|4|V4|4,2|0-(2^{7})|73|14,26
38|4|V4|4,2|0-(2^{7})|74|17,24,25
39|5|C2|2,1|2-(2, 2)|82|11,20,29,32,37,38
40|6|C2|2,1|1-(2^{6})|83|22,28,30,31,38
41|7|C2|2,1|0-(2^{10})|84|27,33,37"""
red = {41,37,33,26,27,21,16,14,7,6,4,8}
yellow = {35,34,29,30,28,18,15,17,23,12,11,10,2,9,5,3}
blue = {40,39,38,36,32,31,24,25,20,19,22,13,1}
assert len(red|yellow|blue)==41
gen41 = " + ".join(f"$a{i}*x^{i}" for i in range(10,0,-1)) + " + $a0"
fam = {
 23: (5, "x*(x-1)*(x-$l)", {"l":"3"}, None, "y^5=x(x-1)(x-λ)"),
 9: (5, "x^3 - 1", {}, None, "y^5=x^3-1"),
 11: (5, "x*(x^2-1)", {}, None, "y^5=x(x^2-1)"),
 34: (3, "x*(x-1)*(x-$a1)*(x-$a2)*(x-$a3)", {"a1":"2","a2":"3","a3":"5"}, [["a1","a2","a3"]], "y^3= x(x-1)(x-α_1)(x-α_2)(x-α_3)"),
 28: (3, "(x^2-1)*(x^2-$a1)*(x^2-$a2)", {"a1":"4","a2":"9"}, [["a1","a2"]], "y^3= (x^2-1)(x^2-α_1)(x^2-α_2)"),
 15: (3, "x^6 + $l*x^3 + 1", {"l":"3"}, None, "y^3 = x^6+ λ x^3 +1"),
 17: (3, "(x^2-1)*(x^4 - $l*x^2 + 1)", {"l":"3"}, None, "y^3= (x^2-1) (x^4 - λx^2 +1 )"),
 2: (3, "x*(x^4-1)", {}, None, "y^3 = x (x^4-1)"),
 5: (3, "x^6 - 1", {}, None, "y^3 = x^6-1"),
 35: (3, "(x^2-2)*(x^4 + $b*x^2 + $c*x + $d)", {"b":"1","c":"1","d":"1"}, None, "y^3=(x^2-2)(x^4+bx^2+cx+d)"),
 29: (3, "1 + x*(x^5 + ($b-2)*x^3 + x^3*$c - (2*$b+1/2)*x - 2*$c)", {"b":"1","c":"1"}, None, "y^3-1= x ( x^5+(b-2)x^3+x^3c-(2b+1/2)x-2c )"),
 12: (3, "1 + x^6 + $l*x^3 + 1", {"l":"1"}, None, "y^3-1=x^6+λ x^3 +1"),
 18: (3, "1 + (x^2-1)*(x^2-$a1)*(x^2-$a2)", {"a1":"2","a2":"3"}, [["a1","a2"]], "y^3-1=(x^2-1)(x^2-α_1)(x^2-α_2)"),
 3: (3, "1 + x^6 - 1", {}, None, "y^3-1 = x^6- 1"),
 22: (6, "x*(x-1)*(x-$a)", {"a":"3"}, None, "y^6= x(x-1)(x-α)"),
 30: (4, "x^2*(x-1)*(x-$a1)*(x-$a2)", {"a1":"2","a2":"5"}, [["a1","a2"]], "y^4=x^2(x-1)(x-α_1)(x-α_2)"),
 10: (4, "x^2*(x^3-1)", {}, None, "y^4= x^2 (x^3-1)"),
 41: (2, gen41, {**{f"a{i}":"0" for i in range(11)}, "a10":"1","a1":"1","a0":"1"}, None, "y^2=f(x), deg f = 9, 10"),
 37: (2, "x^10 + $a1*x^8 + $a2*x^6 + $a3*x^4 + $a4*x^2 + 1", {"a1":"1","a2":"2","a3":"3","a4":"4"}, None, "y^2= x^{10} + a_1 x^8 + a_2 x^6 + a_3 x^4 + a_4 x^2 +1"),
 33: (2, "x*(x^8 + $a1*x^6 + $a2*x^4 + $a3*x^2 + 1)", {"a1":"1","a2":"2","a3":"3"}, None, "y^2 = x (x^8 + a_1 x^6 + a_2 x^4 + a_3 x^2 +1)"),
 26: (2, "x*(x^4 + $l1*x^2 + 1)*(x^4 + $l2*x^2 + 1)", {"l1":"3","l2":"5"}, [["l1","l2"]], "y^2 =x (x^4+λ_1 x^2 +1)(x^4+λ_2 x^2 +1)"),
 27: (2, "x^9 + $a1*x^6 + $a2*x^3 + 1", {"a1":"1","a2":"3"}, None, "y^2 =x^9+a_1x^6+a_2 x^3 +1"),
 4: (2, "x^10 - 1", {}, None, "y^2 =x^{10}-1"),
 6: (2, "x*(x^8 - 1)", {}, None, "y^2 =x (x^8-1)"),
 7: (2, "(x^3 - 1)*(x^6 - 20*x^3 - 8)", {}, None, "y^2 = x (x^4-1)(x^4+2i √3 x^2 +1)"),
 8: (2, "x^9 + 1", {}, None, "y^2 =x^9+1"),
 21: (2, "x*(x^4 - 1)*(x^4 + $l*x^2 + 1)", {"l":"3"}, None, "y^2 =x (x^4-1)(x^4 + λ x^2 +1)"),
 14: (2, "x^10 + $l*x^5 + 1", {"l":"3"}, None, "y^2 =x^{10} + λ x^5 +1"),
 16: (2, "x*(x^8 + $l*x^4 + 1)", {"l":"3"}, None, "y^2 =x(x^8 + λ x^4 +1)"),
}
assert len(fam)==29
def inst(tmpl, sample):
    s = tmpl
    for k in sorted(sample, key=len, reverse=True):
        s = s.replace("$"+k, "("+sample[k]+")")
    return sp.expand(sp.sympify(s.replace("^","**")))
def genus(n, f):
    P = sp.Poly(f, x)
    c, facs = P.factor_list()
    tot = 0
    for g, m in facs:
        if m % n: tot += g.degree()*(n - gcd(n, m))
    d = P.degree()
    tot += n - gcd(n, d)
    allg = n
    for g,m in facs: allg = gcd(allg, m)
    return 1 + (-2*n + tot)//2, allg == 1
loci = []
for line in rows.split("\n"):
    c, dim, grp, gid, sig, tc, subs = line.split("|")
    c = int(c)
    rec = {"case": c, "dim": int(dim), "group": grp, "gap_id": [int(v) for v in gid.split(",")],
           "signature": sig, "type_code": int(tc), "subs": [int(v) for v in subs.split(",")] if subs else [],
           "diagram_color": "red" if c in red else ("yellow" if c in yellow else "blue")}
    if c in fam:
        n, t, smp, sym, src = fam[c]
        f = inst(t, smp)
        g, irr = genus(n, f)
        P = sp.Poly(f, x)
        sq = sp.Poly(sp.sqf_part(P.as_expr()), x)
        cont, prim = sq.primitive()
        if prim.LC() < 0: prim = -prim
        disc = sp.discriminant(prim.as_expr(), x) if prim.degree() > 1 else 1
        print(c, n, sp.factor(f), "genus", g, "irreducible", irr, "disc", disc)
        famd = {"n": n, "template": t, "params": sorted(smp.keys(), key=lambda k: (len(k), k)) if c != 41 else [f"a{i}" for i in range(10,-1,-1)],
                "sample": smp}
        if sym: famd["symmetric"] = sym
        if c in (41, 18): famd["normalized"] = False
        if c == 41: famd["generic"] = True
        famd["source_equation"] = src
        famd["certificate"] = str(disc)
        rec["family"] = famd
    loci.append(rec)
doc = {"format": "supercurve-loci", "version": "1.0.0", "genus": 4, "loci": loci}
with open(os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "data", "genus4_loci.json"), "w") as fh:
    json.dump(doc, fh, indent=2, ensure_ascii=False)
    fh.write("\n")
