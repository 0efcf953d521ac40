"""Extend the binary order-3 sequence 11000101, then check our output and a known reference answer."""

from dbextend.cli import format_word
from dbextend.extender import extend, insertion_trace
from dbextend.verifier import verify_extension

V = (1, 1, 0, 0, 0, 1, 0, 1)
REFERENCE_W = tuple(int(c) for c in "122212111002202000120102101")


def main():
    r = extend(V, 2, 3)
    print("v         ", format_word(V, 2))
    print("w (ours)  ", format_word(r.output, 3))
    print("w (ref)   ", format_word(REFERENCE_W, 3))
    print()
    print("\n".join(insertion_trace(r)))
    for name, w in (("ours", r.output), ("reference", REFERENCE_W)):
        print(f"\n{name}:\n{verify_extension(V, w, 2, 3).summary()}")


if __name__ == "__main__":
    main()
