"""Entry point for the Čech zig-zag CLI."""

from click.exceptions import Abort, ClickException

from app.services.zigzag.common import ExitCode

from .cli import cech_zigzag_cli


def main() -> None:
    # Click reports usage errors with 2, which is reserved for certification failures here.
    try:
        code = cech_zigzag_cli(standalone_mode=False)
    except ClickException as e:
        e.show()
        code = ExitCode.USAGE
    except Abort:
        code = ExitCode.USAGE
    # Without standalone mode, typer.Exit comes back as the return value.
    if isinstance(code, int) and code:
        raise SystemExit(int(code))


if __name__ == "__main__":
    main()
