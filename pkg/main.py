#!/usr/bin/env python3
import sys

from dotenv import load_dotenv
from src.config import Config
from src.core.cli import main as cli_main


def main():
    load_dotenv()
    config = Config.from_env()
    sys.exit(cli_main(config=config))


if __name__ == "__main__":
    main()
