#!/usr/bin/env python

"""Gymnav Main Interface"""
import logging
import sys
from src import ConfigParser, GymNavEnvironment, config_log
from src.agents import QTableFormatError, UnknownAlgorithm
from src.cli import (
    PROG,
    benchmark_cmd,
    build_parser,
    list_envs,
    pre_parse_config,
    render_cmd,
    throughput_cmd,
    train_cmd,
)
from src.config import ConfigError
from src.environment import EnvConfigError, Registry, UnknownEnvironment, default_registry
from src.geometry import WorldFormatError
from src.harness import HarnessError

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2


def main(argv: list[str] = None, registry: Registry = None) -> int:
    """Main Entry Point.

    Args:
        argv (list[str], optional): Arguments without the program name. Defaults to sys.argv[1:].
        registry (Registry, optional): Environments to serve. Defaults to the built-in worlds.

    Returns:
        int: 0 on success, 1 on an I/O or input file failure, 2 on a usage error
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    env = GymNavEnvironment()
    cfg_parser = ConfigParser()

    config_path = pre_parse_config(argv) or env.config_path
    try:
        cfg = cfg_parser.get_config(config_path) if config_path else cfg_parser.default()
    except ConfigError as e:
        print(f"{PROG}: {e}", file=sys.stderr)
        return EXIT_IO

    config_log(cfg.logs, env.log_dir)
    log = logging.getLogger("Gymnav")

    parser = build_parser(cfg)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    log.debug("========== Environment ==========")
    for k, v in env.raw_vars.items():
        log.debug("%s = %s", k, v)
    log.debug("========== Environment ==========")

    if registry is None:
        registry = default_registry()
        if env.worlds_dir:
            registry.load_world_dir(env.worlds_dir, cfg.environment.collision_threshold)

    try:
        match args.command:
            case "list-envs":
                print(list_envs(registry), end="")
            case "train":
                return train_cmd(args, cfg, registry)
            case "benchmark":
                return benchmark_cmd(args, cfg, registry)
            case "render":
                return render_cmd(args, cfg, registry)
            case "throughput":
                return throughput_cmd(args, cfg, registry)
    except (UnknownEnvironment, UnknownAlgorithm, EnvConfigError, ValueError) as e:
        log.debug("Usage error", exc_info=True)
        print(f"{PROG} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, QTableFormatError, WorldFormatError, HarnessError) as e:
        log.critical("%s failed. Error: %s", args.command, e)
        return EXIT_IO

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
