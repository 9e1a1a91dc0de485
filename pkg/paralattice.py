# -*- coding: utf-8 -*-
# Module: paralattice
# License: MIT
"""Command line entry point: paralattice <command> --config FILE"""
import sys

from resources.lib.globals import g

import resources.lib.common as common
import resources.lib.navigation as nav
import resources.lib.navigation.commands as commands
import resources.lib.report as report

# Exit code for configuration errors, as argparse uses for usage errors
EXIT_CONFIG_ERROR = 2

NAV_HANDLERS = {command: commands.CommandExecutor for command in g.COMMANDS}


def route(command, config):
    """Route to the appropriate handler"""
    common.debug('Routing command {}'.format(command))
    if command not in NAV_HANDLERS:
        raise nav.InvalidCommandError('No handler for command {}'
                                      .format(command))
    return nav.execute(NAV_HANDLERS[command], command, config)


def write_report(run_report):
    """Write the JSON report to --out or stdout"""
    text = run_report.to_json()
    if g.OUT_PATH:
        common.save_file(g.OUT_PATH, text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    """Run one command and return the process exit code"""
    # pylint: disable=broad-except
    g.init_globals(argv if argv is not None else sys.argv)
    common.setup_logging()
    common.info('Started (Version {})'.format(g.VERSION))
    common.info('Command {} with config {}'.format(g.COMMAND, g.CONFIG_PATH))
    try:
        config = report.load_config(g.CONFIG_PATH, g.COMMAND)
        run_report = route(g.COMMAND, config)
    except report.ConfigError as exc:
        common.error('Invalid configuration: {exc}', exc)
        run_report = report.Report(g.COMMAND)
        run_report.add_error(exc)
        write_report(run_report)
        return EXIT_CONFIG_ERROR
    except Exception:
        common.error(common.format_traceback())
        return 1
    write_report(run_report)
    common.log_time_trace()
    return run_report.exit_code


if __name__ == '__main__':
    sys.exit(main())
