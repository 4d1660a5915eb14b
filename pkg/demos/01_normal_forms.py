"""Two normal forms of the same braid, and the ultra summit set of delta."""

from periodic_braids.band import normal_form_band, phi_inverse
from periodic_braids.classical import normal_form_artin, uss_artin
from periodic_braids.uss import enumerate_uss, uss_count
from periodic_braids.words import delta_word, parse_word

n = 5
w = parse_word("1 2 -3 2 2 1 4 -1", n)
print("word:", w)

# Classical structure: Delta^p followed by permutation braids (one-line images).
print("classical:", normal_form_artin(w))

# Band structure: d^t followed by non-crossing partitions of the n punctures.
print("band:     ", normal_form_band(phi_inverse(w)))

# The ultra summit set of delta, once by generic closure and once in closed form.
generic = sorted(str(m) for m in uss_artin(delta_word(n)))
print(f"\nUSS(delta) in B_{n}: {len(generic)} members (closed form says {uss_count(n, 'delta')})")
for line in generic:
    print("  ", line)
closed = sorted(str(s) for s in enumerate_uss(n, "delta"))
print("closed-form members:", closed)
