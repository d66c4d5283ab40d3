# main.py
"""Entry point: python main.py <command> ... (see cli/main.py)."""

from cli.main import main

if __name__ == "__main__":
    main()
