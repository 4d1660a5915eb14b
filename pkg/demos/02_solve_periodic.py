"""Hide a power of epsilon behind a random conjugator, then recover a conjugator."""

from periodic_braids.bench import random_braid
from periodic_braids.periodic import EpsilonPower, classify
from periodic_braids.solver import algorithm_c, prereduce, verify_certificate
from periodic_braids.typeb import artin_to_sym, decompose_polygonal, fixed_puncture
from periodic_braids.words import epsilon_word, sigma_run

n, k = 7, 3
z = random_braid(n, 5, seed=2024)
x = z.inverse() * epsilon_word(n) ** k * z
print(f"X has {len(x)} letters; classify says {classify(x)}")

# Shorten X first: a conjugate of canonical length <= 1, central twists removed.
x1, q, pre = prereduce(x)
print(f"after prereduction: {len(x1)} letters, {q} full twists stripped")

# Move the fixed puncture to 2 and translate to a symmetric braid on 2n-2 points.
a = fixed_puncture(x1)
c1 = sigma_run(a, 2, n)
y = c1.inverse() * x1 * c1
print(f"fixed puncture {a} moved to 2; symmetric image has {len(artin_to_sym(y))} band letters")
print("its polygonal decomposition:", decompose_polygonal(artin_to_sym(y)))

cert = algorithm_c(x, k)
print(f"\nconjugator with {len(cert.conjugator)} letters, verified: {verify_certificate(x, cert)}")
