"""
    Make the list of verification commands for batch submission
"""
import argparse
import os
import common.utils as utils


def argparser():
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(description="Make verification commands for batch jobs")
    parser.add_argument("--suites", type=str, default="",
                        help="Suites to include, comma-separated (default: all in suites.yml)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="Worker processes per command (default: 1)")
    parser.add_argument("--method", type=str, default="enumeration",
                        help="Face counting method (default: enumeration)")
    args = parser.parse_args()
    return args


def is_completed(status_file: str) -> bool:
    """True when the status file reports a finished, passing run."""
    if not os.path.exists(status_file):
        return False
    with open(status_file, "r", encoding='utf-8') as f:
        return "VERIFICATION COMPLETED" in f.read()


def build_commands(fw_config: dict, suites_cfg: dict, selected=None,
                   jobs: int = 1, method: str = "enumeration") -> list:
    """
    One run_gac.py verify command per (suite, m), skipping completed ones.

    Args:
        :param fw_config: parsed main.cfg (report_dir and status_dir are used)
        :param suites_cfg: {suite: [m, ...]}; product takes no m and may map to null
        :param selected: suites to keep, all when empty
        :return: list of command strings
    """
    commands = []
    status_dir = fw_config["status_dir"]
    report_dir = fw_config["report_dir"]
    for suite, m_values in suites_cfg.items():
        if selected and suite not in selected:
            continue
        print(f"Suite: {suite}")
        for m in (m_values or [None]):
            status_file = utils.status_path(status_dir, suite, m)
            if is_completed(status_file):
                print(f"Suite {suite} m={m} already verified. Skipping...")
                continue
            tag = os.path.basename(status_file).replace("_status.out", "")
            command = f"python src/run_gac.py verify --suite {suite} "
            if m is not None:
                command += f"--m {m} "
            command += f"--jobs {jobs} --method {method} "
            command += f"--output '{os.path.join(report_dir, tag + '.json')}' "
            command += f"--status-dir '{status_dir}'"
            commands.append(command)
    return commands


def main():
    """Main function"""
    args = argparser()
    fw_config = utils.parse_main_config()
    suites_cfg = utils.load_yaml(fw_config["suites_config"])["suites"]
    selected = [suite.strip() for suite in args.suites.split(",") if suite.strip()] \
        or fw_config.get("suites", [])

    os.makedirs(fw_config["report_dir"], exist_ok=True)
    os.makedirs(fw_config["status_dir"], exist_ok=True)
    commands = build_commands(fw_config, suites_cfg, selected, args.jobs, args.method)

    command_file_path = f"{fw_config['fw_dir']}/verification_commands_{args.suites.replace(',', '_')}.sh" \
        if args.suites else f"{fw_config['fw_dir']}/verification_commands.sh"
    with open(command_file_path, "w", encoding='utf-8') as cmd_file:
        cmd_file.write("".join(command + "\n" for command in commands))
    print(f"Wrote {len(commands)} commands to {command_file_path}")


if __name__ == "__main__":
    main()
