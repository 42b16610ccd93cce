from src.utils import parallel_map


class TestParallelMap:
    """Test order preserving fan-out"""

    def test_serial(self):
        """Test the single worker path"""
        assert parallel_map(abs, [-3, 1, -2]) == [3, 1, 2]

    def test_empty(self):
        """Test an empty input"""
        assert parallel_map(abs, [], workers=4) == []

    def test_workers_keep_order(self):
        """Test that a pool keeps input order"""
        items = list(range(-20, 20))
        assert parallel_map(abs, items, workers=2) == [abs(x) for x in items]
