import pytest

from src.utils import LogLevel, create_logger, set_log_level


@pytest.fixture(autouse=True)
def reset_level():
    set_log_level(LogLevel.INFO)
    yield
    set_log_level(LogLevel.INFO)


class TestLogger:
    """Test the stderr logger"""

    def test_info_goes_to_stderr(self, capsys):
        """Test that messages go to stderr"""
        create_logger("test").info("hello")
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "test: hello" in captured.err

    def test_debug_hidden_by_default(self, capsys):
        """Test that debug messages are hidden at INFO"""
        create_logger("test").debug("hidden")
        assert "hidden" not in capsys.readouterr().err

    def test_debug_enabled(self, capsys):
        """Test that a debug logger shows debug messages"""
        create_logger("test", debug=True).debug("shown")
        assert "shown" in capsys.readouterr().err

    def test_global_level(self, capsys):
        """Test that the global level filters messages"""
        set_log_level(LogLevel.ERROR)
        logger = create_logger("test")
        logger.warning("quiet")
        logger.error("loud")
        err = capsys.readouterr().err
        assert "quiet" not in err
        assert "loud" in err

    def test_convenience_methods(self, capsys):
        """Test the emoji helpers"""
        logger = create_logger("test")
        logger.success("done")
        logger.ray("tracing")
        err = capsys.readouterr().err
        assert "✅ done" in err
        assert "🌀 tracing" in err
