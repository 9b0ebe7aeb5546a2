"""
Script to check the output of verification Slurm jobs.
"""
import argparse
import os
import shlex
import common.utils as utils
from common.make_slurm_jobs import read_commands, read_job_map


def _option(tokens, name):
    if name in tokens and tokens.index(name) + 1 < len(tokens):
        return tokens[tokens.index(name) + 1]
    return None


def command_status_file(command: str, fw_config: dict) -> str:
    """Status file a run_gac.py verify command writes."""
    tokens = shlex.split(command)
    suite = _option(tokens, "--suite")
    if suite is None:
        raise ValueError(f"Invalid command, no --suite: {command}")
    m = _option(tokens, "--m")
    status_dir = _option(tokens, "--status-dir") or fw_config["status_dir"]
    return utils.status_path(status_dir, suite, int(m) if m is not None else None)


def check_command_output(command: str, fw_config: dict) -> bool:
    """
    check the status file of a command in the command list
    """
    command = command.strip()
    if not command:
        return False
    try:
        status_file = command_status_file(command, fw_config)
    except ValueError as e:
        print(e)
        return False
    if not os.path.exists(status_file):
        return False
    with open(status_file, "r", encoding='utf-8') as f:
        content = f.read()
    return "VERIFICATION COMPLETED" in content


def failed_jobs(commands, job_ids: dict, fw_config: dict) -> list:
    """
    (job ID, command) of every command without a completed status file. Job IDs come from
    the job map; without one, command n is assumed to run as job n.
    """
    return [(job_ids.get(number, number), command)
            for number, command in enumerate(commands, start=1)
            if not check_command_output(command, fw_config)]


def write_retry_script(failed_commands, commandlist, cluster, account) -> str:
    """sbatch script for the failed jobs, reusing the header of the old submission script."""
    old_submission_script = f"Run{cluster}{account}Slurm_" \
                            f"{os.path.basename(commandlist).rsplit('.', 1)[0]}.sh"
    initial_txt = "#!/bin/sh\n"
    if os.path.exists(old_submission_script):
        initial_txt = ""
        with open(old_submission_script, "r", encoding='utf-8') as f:
            for line in f.readlines():
                if "sbatch" in line:
                    break
                initial_txt += line
    retry_script = f"Run{cluster}{account}Slurm_verification_retryJobs.sh"
    with open(retry_script, "w", encoding='utf-8') as f:
        f.write(initial_txt)
        for idx, _ in failed_commands:
            f.write(f"sbatch {cluster}{account}SlurmJobs/SlurmJob_{idx}.sh\n")
    return retry_script


def main(argv=None):
    """Main function to parse arguments and check command outputs."""
    parser = argparse.ArgumentParser()
    parser.add_argument("commandlist")
    parser.add_argument("--cluster", type=str, default="Hammer",
                        help='Cluster the jobs were submitted to. Default is Hammer.')
    parser.add_argument("--account", type=str, default="math",
                        help='Account the jobs were submitted to. Default is math.')
    args = parser.parse_args(argv)

    commands = read_commands(args.commandlist)
    fw_config = utils.parse_main_config()

    failed_commands = failed_jobs(commands, read_job_map(args.commandlist, args.cluster,
                                                         args.account), fw_config)

    if failed_commands:
        print("The following commands failed or did not finish:")
        for idx, command in failed_commands:
            print(f"Job {idx}: {command}")
        retry_script = write_retry_script(failed_commands, args.commandlist,
                                          args.cluster, args.account)
        print(f"Wrote retry script {retry_script}")
    else:
        print("All commands succeeded.")
    return failed_commands


if __name__ == "__main__":
    main()
