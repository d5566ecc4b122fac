use std::process::Command;
use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use bmgl_cli::service::{router, Sessions};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri);
    let req = match body {
        Some(b) => req
            .header("content-type", "application/json")
            .body(Body::from(b.to_string())),
        None => req.body(Body::empty()),
    }
    .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap())
}

fn app() -> Router {
    router(Arc::new(Sessions::in_memory()))
}

fn bmgl(args: &[&str]) -> String {
    let o = Command::new(env!("CARGO_BIN_EXE_bmgl"))
        .args(args)
        .env_remove("BMGL_SEED")
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

/// A legal move one symbol deeper than the current V.
fn deeper(v: &Value, k: u64) -> Value {
    let mut s = v.as_array().cloned().unwrap_or_default();
    s.push(json!(k));
    Value::Array(s)
}

#[tokio::test]
async fn create_move_and_read_back() {
    let app = app();
    let (st, created) = call(
        &app,
        "POST",
        "/session",
        Some(json!({"horizon": 4, "seed": 3})),
    )
    .await;
    assert_eq!(st, StatusCode::CREATED);
    assert_eq!(created["id"], "s1");
    assert_eq!(created["state"]["round"], 0);
    let (st, reply) = call(&app, "POST", "/session/s1/move", Some(json!({"u": "[3]"}))).await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(reply["round"], 0);
    assert_eq!(reply["u"], json!([3]));
    assert!(reply["audit"].is_object());
    let v = reply["v"].clone();
    call(
        &app,
        "POST",
        "/session/s1/move",
        Some(json!({"u": deeper(&v, 1)})),
    )
    .await;
    let (st, _) = call(
        &app,
        "POST",
        "/session/s1/move",
        Some(json!({"auto": true})),
    )
    .await;
    assert_eq!(st, StatusCode::OK);
    let (st, t) = call(&app, "GET", "/session/s1/transcript", None).await;
    assert_eq!(st, StatusCode::OK);
    let rounds = t["rounds"].as_array().unwrap();
    assert_eq!(rounds.len(), 3);
    for (i, r) in rounds.iter().enumerate() {
        assert_eq!(r["n"], i);
        assert!(r["U"].is_array() && r["V"].is_array());
    }
    let (_, state) = call(&app, "GET", "/session/s1", None).await;
    assert_eq!(state["round"], 3);
    let (_, second) = call(&app, "POST", "/session", None).await;
    assert_eq!(second["id"], "s2");
}

#[tokio::test]
async fn errors_are_machine_readable() {
    let app = app();
    call(&app, "POST", "/session", Some(json!({"horizon": 3}))).await;
    call(&app, "POST", "/session/s1/move", Some(json!({"u": [3]}))).await;
    let (st, err) = call(&app, "POST", "/session/s1/move", Some(json!({"u": [4]}))).await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
    assert_eq!(err["error"], "illegal_move");
    assert_eq!(err["reason"], "not a subset of previous V");
    assert_eq!(err["round"], 1);
    let (st, err) = call(&app, "POST", "/session/s9/move", Some(json!({"u": [4]}))).await;
    assert_eq!(st, StatusCode::NOT_FOUND);
    assert_eq!(err["error"], "unknown_session");
    let (st, _) = call(&app, "GET", "/session/s9/transcript", None).await;
    assert_eq!(st, StatusCode::NOT_FOUND);
    let (st, _) = call(&app, "POST", "/session", Some(json!({"system": "cantor"}))).await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
    let (st, _) = call(&app, "POST", "/session", Some(json!({"sigma": "greedy"}))).await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
    let (st, _) = call(&app, "POST", "/session/s1/move", Some(json!({}))).await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
    let (st, _) = call(&app, "POST", "/session/s1/move", Some(json!({"u": "[x"}))).await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn finished_sessions_refuse_moves() {
    let app = app();
    call(&app, "POST", "/session", Some(json!({"horizon": 1}))).await;
    let (_, reply) = call(&app, "POST", "/session/s1/move", Some(json!({"u": [2]}))).await;
    assert_eq!(reply["outcome"]["outcome"], "NonemptyCertified");
    let (st, err) = call(
        &app,
        "POST",
        "/session/s1/move",
        Some(json!({"auto": true})),
    )
    .await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
    assert_eq!(err["error"], "finished");
}

#[tokio::test]
async fn service_and_cli_agree_on_a_scripted_session() {
    let app = app();
    call(
        &app,
        "POST",
        "/session",
        Some(json!({"horizon": 6, "seed": 7})),
    )
    .await;
    let mut moves = Vec::new();
    let mut audits = Vec::new();
    let mut v = json!([]);
    for k in 0..6u64 {
        let u = deeper(&v, 3 + k);
        let (st, reply) = call(
            &app,
            "POST",
            "/session/s1/move",
            Some(json!({"u": u.clone()})),
        )
        .await;
        assert_eq!(st, StatusCode::OK);
        v = reply["v"].clone();
        moves.push(
            u.as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        audits.push(reply["audit"].clone());
    }
    let script = moves.join("; ");
    let (_, t) = call(&app, "GET", "/session/s1/transcript", None).await;

    let cli: Vec<Value> = bmgl(&["game", "run", "--seed", "7", "--moves", &script])
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(cli.len(), 7);
    assert_eq!(Value::Array(cli[..6].to_vec()), t["rounds"]);
    assert_eq!(cli[6], t["outcome"]);

    let cli_audits: Vec<Value> = bmgl(&["game", "audit", "--moves", &script])
        .lines()
        .take(6)
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(cli_audits, audits);
}

#[tokio::test]
async fn seeded_auto_moves_match_cli_runs() {
    let app = app();
    call(
        &app,
        "POST",
        "/session",
        Some(json!({"horizon": 5, "seed": 11})),
    )
    .await;
    for _ in 0..5 {
        call(
            &app,
            "POST",
            "/session/s1/move",
            Some(json!({"auto": true})),
        )
        .await;
    }
    let (_, t) = call(&app, "GET", "/session/s1/transcript", None).await;
    let cli: Vec<Value> = bmgl(&["game", "run", "--seed", "11", "--horizon", "5"])
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(Value::Array(cli[..5].to_vec()), t["rounds"]);
}

#[tokio::test]
async fn persisted_sessions_resume() {
    let dir = tempfile::tempdir().unwrap();
    let before = {
        let app = router(Arc::new(Sessions::persistent(dir.path()).unwrap()));
        call(
            &app,
            "POST",
            "/session",
            Some(json!({"horizon": 8, "seed": 5})),
        )
        .await;
        call(&app, "POST", "/session/s1/move", Some(json!({"u": [1, 2]}))).await;
        call(
            &app,
            "POST",
            "/session/s1/move",
            Some(json!({"auto": true})),
        )
        .await;
        let (st, _) = call(&app, "POST", "/session/s1/move", Some(json!({"u": [9]}))).await;
        assert_eq!(st, StatusCode::BAD_REQUEST);
        call(&app, "GET", "/session/s1/transcript", None).await.1
    };
    let log = std::fs::read_to_string(dir.path().join("s1.jsonl")).unwrap();
    assert_eq!(log.lines().count(), 3);

    let app = router(Arc::new(Sessions::persistent(dir.path()).unwrap()));
    let (_, after) = call(&app, "GET", "/session/s1/transcript", None).await;
    assert_eq!(before, after);
    let (_, next) = call(&app, "POST", "/session", None).await;
    assert_eq!(next["id"], "s2");
    let (st, _) = call(
        &app,
        "POST",
        "/session/s1/move",
        Some(json!({"auto": true})),
    )
    .await;
    assert_eq!(st, StatusCode::OK);
}
