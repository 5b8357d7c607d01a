# libs/constructions/factory.py
from libs.carrier.structure import FinStructure
from libs.errors import SnrError


def build_structure(kind: str, args: list[int]) -> FinStructure:
    """
    根据名字构造示例结构：
    支持：powerset S M N / modring Q M N / affine Q
    (product 需要两个结构，由 direct_product 直接处理)
    """
    kind = kind.lower()

    if kind == "powerset":
        from libs.constructions.generators import gen_powerset

        _expect(kind, args, 3)
        return gen_powerset(*args)

    if kind == "modring":
        from libs.constructions.generators import gen_modring

        _expect(kind, args, 3)
        return gen_modring(*args)

    if kind == "affine":
        from libs.constructions.generators import gen_affine

        _expect(kind, args, 1)
        return gen_affine(*args)

    raise SnrError(f"Unsupported construction={kind}")


def _expect(kind: str, args: list[int], count: int) -> None:
    if len(args) != count:
        raise SnrError(f"{kind} takes {count} integer arguments, got {len(args)}")
