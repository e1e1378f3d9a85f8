"""The whole image of phi on small tables, next to one sequence it misses."""

import time

from wpp import CoefficientSequence, enumerate_phi_image, phi_preimage_search

t0 = time.perf_counter()
image = enumerate_phi_image(3, 2, 1)
print(f"{len(image)} coefficient sequences in the image ({time.perf_counter() - t0:.2f}s)")
for cs in image[:5]:
    print("  ", cs)

outsider = CoefficientSequence(3, {s: 2 if len(s) >= 2 else 1 for s in image[0].table})
print("the all-2 sequence is in the image:", outsider in set(image))
print("every image point has a witness:", all(phi_preimage_search(cs).found for cs in image))

# larger exponent bound; the refusal message gives the table-count estimate
print(len(enumerate_phi_image(3, 2, 2)), "points with exponents up to 2")
try:
    enumerate_phi_image(4, 2, 2)
except ValueError as exc:
    print(exc)
