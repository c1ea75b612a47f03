"""
Progress display for multi-trial decoding runs.
"""

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)

# stdout is reserved for reports
console = Console(stderr=True)


class ProgressTracker:
    """Bar over a fixed number of trials with a running count of successes.

    A no-op when ``show_progress`` is false; ``recovered`` is counted either way.
    """

    def __init__(self, total: int, description: str = "Decoding", show_progress: bool = True):
        self.total = total
        self.recovered = 0
        self.show_progress = show_progress
        self.progress = None
        self.task_id = None

        if show_progress:
            self.progress = Progress(
                SpinnerColumn(),
                TextColumn(f"[bold green]{description}..."),
                BarColumn(),
                MofNCompleteColumn(),
                TextColumn("[cyan]{task.fields[recovered]} recovered"),
                TimeElapsedColumn(),
                console=console,
            )
            self.task_id = self.progress.add_task(description, total=total, recovered=0)

    def start(self):
        if self.progress:
            self.progress.start()

    def record(self, ok: bool):
        """Advance by one trial."""
        if ok:
            self.recovered += 1
        if self.progress and self.task_id is not None:
            self.progress.update(self.task_id, advance=1, recovered=self.recovered)

    def stop(self):
        if self.progress:
            self.progress.stop()

    @property
    def all_recovered(self) -> bool:
        return self.recovered == self.total

    def __enter__(self) -> "ProgressTracker":
        self.start()
        return self

    def __exit__(self, *exc) -> None:
        self.stop()
