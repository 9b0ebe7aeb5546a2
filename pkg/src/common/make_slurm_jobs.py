"""
Make SLURM job scripts for running verification commands.
This script generates one SLURM job script per command of a command list, handling the
activation of the environment, job parameters, and command execution, plus the
submission scripts that sbatch them.
"""
#!/usr/bin/env python
import argparse
import re
import os
import concurrent.futures
import common.utils

MAX_JOBS_PER_RUNFILE = 5000
FALLBACK_RESOURCES = {"cpu": "1", "mem": "4000", "time": "0-04:00:00"}


CONDA_MODULES = {"Hammer": "anaconda", "Gautschi": "conda"}


def environment_lines(args) -> list:
    """Shell lines entering the checkout and activating conda or the pixi environment."""
    lines = [f"cd {args.fw_dir} || exit 1"] if args.fw_dir else []
    if args.conda_env:
        if args.cluster not in CONDA_MODULES:
            raise NotImplementedError(f"Cluster {args.cluster} "
                                      "is not supported for conda environment activation.")
        lines += ["source /etc/profile.d/modules.sh", f"module load {CONDA_MODULES[args.cluster]}",
                  f"conda activate {args.conda_env}"]
    else:
        lines.append(f'eval "$(pixi shell-hook --manifest-path {args.fw_dir or "."}/pixi.toml)"')
    if args.fw_dir:
        lines.append(f"export PYTHONPATH='{args.fw_dir}/src:$PYTHONPATH'")
    return lines


def write_common_commands(f, command, args):
    """
    Write the environment setup, an echo of the command and the command itself to `f`.
    """
    escaped = command.replace('"', '\\"')
    steps = [step.strip() for step in command.split(";") if step.strip()]
    f.write("\n".join(environment_lines(args) + [f'echo "{escaped}"'] + steps) + "\n")


def job_dir(args) -> str:
    return f"{args.cluster}{args.account}SlurmJobs"


def out_dir(args) -> str:
    return f"{args.cluster}{args.account}SlurmOut"


def sbatch_directives(job_id, args) -> list:
    """#SBATCH header of a verification job; one task using args.cpu worker processes."""
    directives = [f"-A {args.account}", "--ntasks=1", f"--cpus-per-task={args.cpu}",
                  f"--mem-per-cpu={args.mem}", f"--time={args.time}"]
    if args.partition:
        directives.append(f"--partition={args.partition}")
    if args.qos:
        directives.append(f"--qos={args.qos}")
    directives.append(f"--output={out_dir(args)}/slurm-{job_id}-%j.out")
    return [f"#SBATCH {directive}" for directive in directives]


def process_job(job_id, command, args):
    """
    Write the SLURM job script for a given verification command.

    Parameters:
    job_id (int): The job ID.
    command (str): The verification command, `;` separates several
    args (argparse.Namespace): The parsed command-line arguments.

    Returns:
    Tuple[int, str]: The job ID and the job script filename.
    """
    job_script = f"{job_dir(args)}/SlurmJob_{job_id}.sh"
    with open(job_script, "w", encoding='utf-8') as cfg:
        cfg.write("#!/bin/sh\n")
        cfg.write("\n".join(sbatch_directives(job_id, args)) + "\n")
        write_common_commands(cfg, command, args)
    return job_id, job_script


JOB_SCRIPT_PATTERN = re.compile(r"SlurmJob_(\d+)\.sh")


def next_job_index(args) -> int:
    """First free job ID after any existing job scripts, 1 in an empty job directory."""
    ids = [int(match.group(1)) for match in map(JOB_SCRIPT_PATTERN.fullmatch,
                                                 os.listdir(job_dir(args))) if match]
    return max(ids, default=0) + 1


def read_commands(commandlist) -> list:
    """Command list without empty lines and comments."""
    with open(commandlist, "r", encoding='utf-8') as commandlistfile:
        stripped = (line.strip() for line in commandlistfile)
        return [line for line in stripped if line and not line.startswith("#")]


def job_map_path(commandlist, cluster, account) -> str:
    """File recording which job ID runs which command of a command list."""
    list_name = os.path.basename(commandlist).rsplit('.', 1)[0]
    return f"{cluster}{account}SlurmJobs/{list_name}_jobs.map"


def write_job_map(job_ids: dict, args) -> str:
    """One `<command number> <job id>` line per command, command numbers 1-based."""
    map_file = job_map_path(args.commandlist, args.cluster, args.account)
    with open(map_file, "w", encoding='utf-8') as f:
        for number, job_id in sorted(job_ids.items()):
            f.write(f"{number} {job_id}\n")
    return map_file


def read_job_map(commandlist, cluster, account) -> dict:
    """{command number: job id} of the latest make_slurm_jobs run on this list, {} if none."""
    map_file = job_map_path(commandlist, cluster, account)
    if not os.path.exists(map_file):
        return {}
    job_ids = {}
    with open(map_file, "r", encoding='utf-8') as f:
        for line in f:
            if line.strip():
                number, job_id = line.split()
                job_ids[int(number)] = int(job_id)
    return job_ids


def write_run_scripts(results, args) -> list:
    """
    Write the sbatch submission script(s), at most MAX_JOBS_PER_RUNFILE jobs each.
    Returns the written filenames.
    """
    list_name = os.path.basename(args.commandlist).rsplit('.', 1)[0]
    if len(results) > MAX_JOBS_PER_RUNFILE:
        chunks = [(f"Run{args.cluster}{args.account}Slurm_{list_name}_"
                   f"{i // MAX_JOBS_PER_RUNFILE}.sh", results[i:i + MAX_JOBS_PER_RUNFILE])
                  for i in range(0, len(results), MAX_JOBS_PER_RUNFILE)]
    else:
        chunks = [(f"Run{args.cluster}{args.account}Slurm_{list_name}.sh", results)]

    for runfile_basename, chunk in chunks:
        with open(runfile_basename, "w", encoding='utf-8') as runfile:
            runfile.write("#!/bin/sh\n")
            for _, job_script in chunk:
                runfile.write("sbatch " + job_script + "\n")
    return [runfile_basename for runfile_basename, _ in chunks]


def argparser(argv=None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser()
    parser.add_argument("commandlist")
    parser.add_argument("--cpu", type=str, default=None,
                        help='Number of cpus requested for this job. Default from suites.yml.')
    parser.add_argument("--mem", type=str, default=None,
                        help='Amount of memory to allocate per cpu. Default from suites.yml.')
    parser.add_argument("--time", type=str, default=None,
                        help='Amount of time to submit job for. Default from suites.yml.')
    parser.add_argument("--conda-env", type=str, default="",
                        help='Conda environment to activate. Default is the pixi environment.')
    parser.add_argument("--account", type=str, default="math",
                        help='Account to submit job to. Default is math.')
    parser.add_argument("--partition", type=str, default="",
                        help='Partition to submit job to. Default is empty.')
    parser.add_argument("--qos", type=str, default="",
                        help='Quality of service to submit job to. Default is empty.')
    parser.add_argument("--cluster", type=str, default="Hammer",
                        help='Cluster to submit job to. Default is Hammer.')
    parser.add_argument("--threads", type=int, default=20,
                        help='Number of threads for job creation parallelization.')
    args = parser.parse_args(argv)
    return args


def apply_resource_defaults(args, fw_config: dict):
    """Fill --cpu/--mem/--time from the slurm section of suites.yml."""
    resources = dict(FALLBACK_RESOURCES)
    try:
        slurm = common.utils.load_yaml(fw_config["suites_config"]).get("slurm", {})
        resources.update({key: str(value) for key, value in slurm.items()})
    except (FileNotFoundError, KeyError) as e:
        print(f"Warning: no slurm defaults available ({e}), using fallback resources.")
    for key in ("cpu", "mem", "time"):
        if getattr(args, key) is None:
            setattr(args, key, resources[key])


def write_jobs(commands, args) -> list:
    """
    Write the job scripts of a command list, numbered after any existing jobs, and the
    job map of the list.

    Returns:
    List[Tuple[int, str]]: (job ID, job script) in command-list order.
    """
    first_id = next_job_index(args)
    results = []
    with concurrent.futures.ThreadPoolExecutor(max_workers=args.threads) as executor:
        futures = {executor.submit(process_job, job_id, command, args): job_id
                   for job_id, command in enumerate(commands, start=first_id)}
        for future in concurrent.futures.as_completed(futures):
            try:
                results.append(future.result())
            except concurrent.futures.CancelledError as ce:
                print(f"Job {futures[future]} was cancelled:", ce)
            except (OSError, ValueError) as e:
                print(f"Could not write job {futures[future]}:", e)

    # submission order follows the command list
    results.sort(key=lambda x: x[0])
    write_job_map({job_id - first_id + 1: job_id for job_id, _ in results}, args)
    return results


def main(argv=None):
    """Write one job script per verification command and the sbatch submission scripts."""
    args = argparser(argv)
    fw_config = common.utils.parse_main_config()
    args.fw_dir = fw_config["fw_dir"]
    apply_resource_defaults(args, fw_config)

    os.makedirs(job_dir(args), exist_ok=True)
    os.makedirs(out_dir(args), exist_ok=True)

    commands = read_commands(args.commandlist)
    print(f"Writing {len(commands)} job scripts from {args.commandlist}, "
          f"{args.cpu} cpus / {args.mem} MB per cpu / {args.time}")
    results = write_jobs(commands, args)
    for runfile_basename in write_run_scripts(results, args):
        print(f"Wrote submission script {runfile_basename}")


if __name__ == "__main__":
    main()
