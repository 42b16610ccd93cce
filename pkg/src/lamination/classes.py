"""
Angle classes and rational laminations with the unlinked and invariance checks.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from src.circle import Angle, Chord, leaves_cross, sigma
from src.errors import LaminationConsistencyError

AngleLike = Union[Angle, str]


def _as_angle(value: AngleLike) -> Angle:
    return value if isinstance(value, Angle) else Angle.parse(value)


@dataclass(frozen=True, order=True)
class AngleClass:
    """Finite set of angles in increasing (counterclockwise) order"""

    angles: Tuple[Angle, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(self.angles)))
        if not ordered:
            raise LaminationConsistencyError("Angle class must be non-empty")
        object.__setattr__(self, "angles", ordered)

    @classmethod
    def of(cls, *angles: AngleLike) -> "AngleClass":
        return cls(tuple(_as_angle(a) for a in angles))

    def __len__(self) -> int:
        return len(self.angles)

    def __iter__(self) -> Iterator[Angle]:
        return iter(self.angles)

    def __contains__(self, a: object) -> bool:
        return a in self.angles

    def __str__(self) -> str:
        return "{" + ", ".join(str(a) for a in self.angles) + "}"

    @property
    def smallest(self) -> Angle:
        return self.angles[0]

    @property
    def is_leaf_or_polygon(self) -> bool:
        return len(self.angles) >= 2

    def chords(self) -> List[Chord]:
        """Boundary chords: consecutive members, closing the polygon when size >= 3"""
        a = self.angles
        if len(a) < 2:
            return []
        if len(a) == 2:
            return [(a[0], a[1])]
        return [(a[i], a[(i + 1) % len(a)]) for i in range(len(a))]

    def image(self, d: int) -> "AngleClass":
        return AngleClass(tuple(sigma(x, d) for x in self.angles))

    def as_strings(self) -> List[str]:
        return [str(a) for a in self.angles]


def classes_cross(first: AngleClass, second: AngleClass) -> bool:
    return any(
        leaves_cross(p, q) for p in first.chords() for q in second.chords()
    )


@dataclass(frozen=True)
class Lamination:
    """
    Degree plus pairwise disjoint angle classes, sorted by smallest member.
    Warnings record angles whose landing could not be certified.
    """

    degree: int
    classes: Tuple[AngleClass, ...] = ()
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.degree < 2:
            raise LaminationConsistencyError(f"Degree must be >= 2, got {self.degree}")
        ordered = tuple(sorted(set(self.classes)))
        seen: Dict[Angle, AngleClass] = {}
        for cls in ordered:
            for a in cls:
                if a in seen:
                    raise LaminationConsistencyError(
                        f"Angle {a} belongs to both {seen[a]} and {cls}"
                    )
                seen[a] = cls
        object.__setattr__(self, "classes", ordered)
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @classmethod
    def of(cls, degree: int, classes: Iterable[Sequence[AngleLike]]) -> "Lamination":
        return cls(degree, tuple(AngleClass.of(*members) for members in classes))

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[AngleClass]:
        return iter(self.classes)

    def __contains__(self, item: object) -> bool:
        return item in self.classes

    def class_of(self, a: Angle) -> Optional[AngleClass]:
        for cls in self.classes:
            if a in cls:
                return cls
        return None

    def angles(self) -> List[Angle]:
        return sorted(a for cls in self.classes for a in cls)

    def leaves(self) -> "Lamination":
        """Drop singleton classes"""
        return Lamination(
            self.degree, tuple(c for c in self.classes if len(c) >= 2), self.warnings
        )

    def with_classes(self, extra: Iterable[AngleClass]) -> "Lamination":
        return Lamination(self.degree, self.classes + tuple(extra), self.warnings)

    def refines(self, coarser: "Lamination") -> bool:
        """Every class of this lamination lies inside a class of `coarser`"""
        if self.degree != coarser.degree:
            return False
        for cls in self.classes:
            owner = coarser.class_of(cls.smallest)
            if owner is None:
                if len(cls) > 1:
                    return False
                continue
            if not set(cls.angles) <= set(owner.angles):
                return False
        return True

    def is_contained_in(self, other: "Lamination") -> bool:
        """Every class here is also a class of `other`"""
        return self.degree == other.degree and set(self.classes) <= set(other.classes)

    def as_lists(self) -> List[List[str]]:
        return [cls.as_strings() for cls in self.classes]


@dataclass
class CheckResult:
    ok: bool
    violations: List[Tuple[AngleClass, AngleClass]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> List[str]:
        return [f"{first} / {second}" for first, second in self.violations]


def check_unlinked(lam: Lamination) -> CheckResult:
    """Brute force over every pair of classes and every pair of boundary chords"""
    violations = [
        (first, second)
        for first, second in combinations(lam.classes, 2)
        if classes_cross(first, second)
    ]
    return CheckResult(ok=not violations, violations=violations)


def check_invariant(lam: Lamination) -> CheckResult:
    """Each class maps by sigma_d into a single class, or onto a single angle"""
    violations = []
    for cls in lam.classes:
        image = cls.image(lam.degree)
        if len(image) == 1:
            continue
        owner = lam.class_of(image.smallest)
        if owner is None or not set(image.angles) <= set(owner.angles):
            violations.append((cls, image))
    return CheckResult(ok=not violations, violations=violations)
