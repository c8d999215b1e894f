import sys, time
sys.path.insert(0, '/root/pkg/tests/helpers')
from fractions import Fraction as Fr
from superlie import SuperLieEngine

eng = SuperLieEngine(2, 1)

def wt(D, r):
    D, r = Fr(D), Fr(r)
    return (D, Fr(0), -(D + r) / 2)

def show(name, D, r, depth=6):
    t = time.time()
    ch = eng.simple_character(wt(D, r), depth)
    items = sorted(ch.items())
    print(f"{name} (D,r)=({D},{r}) lam={wt(D,r)}  [{time.time()-t:.1f}s]")
    for dv, m in items:
        print(f"   {dv}: {m}")

# typical interior point
show("typ", -3, 1, 5)
# line1 (Delta=-r) C-side, integral pairing
show("line1 int", -2, 2, 6)
# corner
show("corner", -1, 1, 6)
# trivial
show("trivial", 0, 0, 6)
# line1 beyond corner, non-integral
show("line1 frac", Fr(-1,2), Fr(1,2), 5)
# line1 beyond corner integral (footnote K1 weight)
show("line1 beyond int", 1, -1, 6)
# line2 C-side
show("line2", -2, 0, 5)
show("line2 int2", -3, 1, 0)
