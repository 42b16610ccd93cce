import pytest

from src.circle import Angle
from src.errors import LaminationConsistencyError
from src.lamination import (
    AngleClass,
    Lamination,
    check_invariant,
    check_unlinked,
    classes_cross,
)


class TestAngleClass:
    """Test finite angle classes"""

    def test_sorted_and_deduplicated(self):
        """Test that members are sorted and deduplicated"""
        cls = AngleClass.of("2/3", "1/3", "1/3")
        assert cls.angles == (Angle(1, 3), Angle(2, 3))
        assert len(cls) == 2
        assert str(cls) == "{1/3, 2/3}"

    def test_empty_rejected(self):
        """Test that an empty class is an error"""
        with pytest.raises(LaminationConsistencyError):
            AngleClass(())

    def test_chords(self):
        """Test the boundary chords of a polygon"""
        triangle = AngleClass.of("1/7", "2/7", "4/7")
        assert len(triangle.chords()) == 3
        assert AngleClass.of("1/3", "2/3").chords() == [(Angle(1, 3), Angle(2, 3))]
        assert AngleClass.of("0").chords() == []

    def test_image(self):
        """Test the image class under angle doubling"""
        assert AngleClass.of("1/7", "2/7", "4/7").image(2) == AngleClass.of("1/7", "2/7", "4/7")
        assert AngleClass.of("1/6", "5/6").image(2) == AngleClass.of("1/3", "2/3")

    def test_crossing(self):
        """Test crossing and non-crossing pairs of classes"""
        assert classes_cross(AngleClass.of("1/12", "5/12"), AngleClass.of("1/3", "2/3"))
        assert not classes_cross(AngleClass.of("1/12", "11/12"), AngleClass.of("1/3", "2/3"))


class TestLamination:
    """Test lamination construction and queries"""

    def test_classes_sorted_by_smallest(self, basilica_lamination, test_config):
        """Test that classes are ordered by smallest member"""
        assert basilica_lamination.as_lists() == test_config.BASILICA_CLASSES

    def test_overlapping_classes_rejected(self):
        """Test that an angle in two classes is an error"""
        with pytest.raises(LaminationConsistencyError):
            Lamination.of(2, [["1/3", "2/3"], ["2/3", "1/6"]])

    def test_degree_checked(self):
        """Test that degree 1 is rejected"""
        with pytest.raises(LaminationConsistencyError):
            Lamination(1, ())

    def test_class_of(self, basilica_lamination):
        """Test the class lookup for members and non-members"""
        assert basilica_lamination.class_of(Angle(5, 6)) == AngleClass.of("1/6", "5/6")
        assert basilica_lamination.class_of(Angle(1, 2)) is None

    def test_warnings_do_not_affect_equality(self):
        """Test that warnings are ignored by equality"""
        first = Lamination.of(2, [["1/3", "2/3"]])
        second = Lamination(2, first.classes, ("1/5: truncated_budget",))
        assert first == second

    def test_leaves_drops_singletons(self):
        """Test that leaves skips one-angle classes"""
        lam = Lamination.of(2, [["1/3", "2/3"], ["0"]])
        assert lam.leaves().as_lists() == [["1/3", "2/3"]]

    def test_refines(self, basilica_leaf):
        """Test refinement against a coarser lamination"""
        coarser = Lamination.of(2, [["1/3", "1/2", "2/3"]])
        assert basilica_leaf.refines(coarser)
        assert not coarser.refines(basilica_leaf)

    def test_is_contained_in(self, basilica_leaf, basilica_lamination):
        """Test class containment between laminations"""
        assert basilica_leaf.is_contained_in(basilica_lamination)
        assert not basilica_lamination.is_contained_in(basilica_leaf)


class TestChecks:
    """Test the unlinked and invariance checks"""

    def test_basilica_is_valid(self, basilica_lamination):
        """Test that the basilica is unlinked and invariant"""
        assert check_unlinked(basilica_lamination)
        assert check_invariant(basilica_lamination)

    def test_linked_pair_reported(self):
        """Test that a crossing pair is reported"""
        lam = Lamination.of(2, [["1/12", "5/12"], ["1/3", "2/3"]])
        result = check_unlinked(lam)
        assert not result
        assert result.describe() == ["{1/12, 5/12} / {1/3, 2/3}"]

    def test_invariance_violation(self):
        """Test that a missing image class is reported"""
        lam = Lamination.of(2, [["1/5", "2/5"]])
        result = check_invariant(lam)
        assert not result.ok
        assert result.violations[0][1] == AngleClass.of("2/5", "4/5")

    def test_class_collapsing_to_a_point_is_invariant(self):
        """Test that a class mapping to one angle is invariant"""
        lam = Lamination.of(2, [["0", "1/2"]])
        assert check_invariant(lam)

    def test_rabbit_triangle_is_invariant(self):
        """Test that the rabbit triangle maps to itself"""
        assert check_invariant(Lamination.of(2, [["1/7", "2/7", "4/7"]]))
