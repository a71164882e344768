"""
Unit tests for the bounded parallel fan-out.
"""
import threading

from lie2weyl.utils.parallel import parallel_map


class TestParallelMap:
    """Tests for ordering and inline execution."""

    def test_inline(self):
        """Test the inline path with one thread."""
        assert parallel_map(lambda x: x * x, range(5), threads=1) == [0, 1, 4, 9, 16]

    def test_order_preserved(self):
        """Test that results keep the input order."""
        assert parallel_map(lambda x: -x, range(50), threads=4) == [-x for x in range(50)]

    def test_empty(self):
        """Test an empty input."""
        assert parallel_map(lambda x: x, [], threads=4) == []

    def test_uses_worker_threads(self):
        """Test that work leaves the calling thread."""
        main = threading.get_ident()
        idents = parallel_map(lambda _: threading.get_ident(), range(8), threads=4)
        assert all(ident != main for ident in idents)

    def test_default_threads_from_config(self, monkeypatch):
        """Test that the worker count defaults to the runtime config."""
        from lie2weyl.utils.config import config

        monkeypatch.setattr(config.runtime, "threads", 1)
        main = threading.get_ident()
        assert parallel_map(lambda _: threading.get_ident(), range(3)) == [main] * 3
