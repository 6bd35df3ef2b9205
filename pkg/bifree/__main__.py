# -*- coding: utf-8 -*-


__all__ = ("main",)


def main():
    from bifree.cli import cli

    cli()


if __name__ == "__main__":
    main()
